#ifndef ORE_VERIFY_HPP
#define ORE_VERIFY_HPP

#include <map>
#include <optional>
#include <string>

#include "ore/sequence.hpp"

namespace ore {

// One named sequence inside an identity specification.
struct SequenceSource {
    enum class Kind { Fixture, Unroll, Formula } kind;
    std::string fixture_id;            // Fixture
    std::string operator_text;         // Unroll
    Rational offset = 0;               // Unroll
    std::vector<Rational> initial;     // Unroll
    size_t count = 0;                  // Unroll (0: derived from range)
    std::string formula;               // Formula, an expression in n
};

struct IdentitySpec {
    std::string name;
    std::map<std::string, SequenceSource> sequences;
    std::string identity;  // "lhs = rhs"
    long lo = 0, hi = 0;
};

struct VerifyReport {
    bool pass = false;
    std::string name;
    long lo = 0, hi = 0;
    std::optional<long> first_failure;
    std::string detail;
};

IdentitySpec load_identity_spec(const std::string& json_text);
IdentitySpec load_identity_spec_file(const std::string& path);

// Exact check of the identity at every integer index in [lo, hi].
VerifyReport verify_identity(const IdentitySpec& spec, const std::string& fixtures_dir,
                             bool allow_net = false);

}  // namespace ore

#endif
