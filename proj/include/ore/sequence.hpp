#ifndef ORE_SEQUENCE_HPP
#define ORE_SEQUENCE_HPP

#include <string>
#include <vector>

#include "ore/ore_operator.hpp"

namespace ore {

enum class Provenance { Unrolled, Fixture, Formula };

// Exact rational values on the affine grid {offset + n : n in N}; offsets are
// integers or half-integers.
class SequenceGrid {
  public:
    SequenceGrid() = default;
    SequenceGrid(Rational offset, std::vector<Rational> values, Provenance prov);

    const Rational& offset() const { return offset_; }
    size_t size() const { return values_.size(); }
    Provenance provenance() const { return prov_; }
    const std::vector<Rational>& values() const { return values_; }

    bool has(const Rational& point) const;
    const Rational& at(const Rational& point) const;  // throws when off-grid

    // First point past the end of the stored range.
    Rational end_point() const { return offset_ + Rational(static_cast<long>(values_.size())); }

  private:
    Rational offset_ = 0;
    std::vector<Rational> values_;
    Provenance prov_ = Provenance::Fixture;
};

// Extend the initial values to `count` terms by solving for the top term of
// the recurrence exactly. Throws (naming the index) when the leading
// coefficient vanishes at a needed point.
SequenceGrid unroll(const OreOperator& l, const SequenceGrid& initials, size_t count);

// Apply L to a grid: (L w)(x) = sum a_i w(x + i) wherever all terms exist and
// no coefficient has a pole. Used by the numeric oracles.
std::vector<Rational> apply_to_grid(const OreOperator& l, const SequenceGrid& grid);

// Load a b-file ("n a(n)" lines, '#' comments) from the fixture directory; if
// absent and allow_net is set, fetch https://oeis.org/<id>/b<digits>.txt and
// cache it there.
SequenceGrid fetch_bfile(const std::string& id, const std::string& fixtures_dir,
                         bool allow_net = false);

SequenceGrid parse_bfile(const std::string& content, const std::string& what);

}  // namespace ore

#endif
