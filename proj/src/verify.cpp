#include "ore/verify.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ore/parser.hpp"

namespace ore {

namespace {

using nlohmann::json;

Rational rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long>()));
    if (j.is_string()) return rat_from_string(j.get<std::string>());
    throw error("expected integer or rational string in identity spec");
}

// Evaluates identity expressions at a concrete integer index. Sequence
// references are calls name(arg); formula sequences are expanded recursively.
class SequenceEvaluator {
  public:
    SequenceEvaluator(const IdentitySpec& spec, const std::string& fixtures_dir, bool allow_net)
        : spec_(spec) {
        for (const auto& [name, src] : spec.sequences) {
            if (src.kind == SequenceSource::Kind::Fixture) {
                grids_.emplace(name, fetch_bfile(src.fixture_id, fixtures_dir, allow_net));
            } else if (src.kind == SequenceSource::Kind::Unroll) {
                OreOperator l = parse_operator(src.operator_text);
                size_t count = src.count;
                if (count == 0) count = static_cast<size_t>(std::max(0L, spec.hi)) + l.order() + 4;
                SequenceGrid init(src.offset, src.initial, Provenance::Unrolled);
                grids_.emplace(name, unroll(l, init, count));
            } else {
                formulas_.emplace(name, parse_expression(src.formula));
            }
        }
    }

    Rational eval(const ExprNode& n, const Rational& idx, int depth) const {
        if (depth > 16) throw error("formula sequences nest too deeply");
        switch (n.kind) {
            case ExprNode::Kind::Number:
                return n.number;
            case ExprNode::Kind::Variable:
                if (n.name == "n") return idx;
                throw error("unknown symbol '" + n.name + "' in identity");
            case ExprNode::Kind::Call: {
                Rational arg = eval(*n.a, idx, depth);
                auto g = grids_.find(n.name);
                if (g != grids_.end()) return g->second.at(arg);
                auto f = formulas_.find(n.name);
                if (f != formulas_.end()) return eval(*f->second, arg, depth + 1);
                throw error("unknown sequence '" + n.name + "' in identity");
            }
            case ExprNode::Kind::Add:
                return eval(*n.a, idx, depth) + eval(*n.b, idx, depth);
            case ExprNode::Kind::Sub:
                return eval(*n.a, idx, depth) - eval(*n.b, idx, depth);
            case ExprNode::Kind::Mul:
                return eval(*n.a, idx, depth) * eval(*n.b, idx, depth);
            case ExprNode::Kind::Div: {
                Rational d = eval(*n.b, idx, depth);
                if (d == 0) throw error("division by zero in identity");
                return eval(*n.a, idx, depth) / d;
            }
            case ExprNode::Kind::Neg:
                return -eval(*n.a, idx, depth);
            case ExprNode::Kind::Pow:
                return rat_pow(eval(*n.a, idx, depth), n.exponent);
        }
        throw error("malformed identity expression");
    }

  private:
    const IdentitySpec& spec_;
    std::map<std::string, SequenceGrid> grids_;
    std::map<std::string, std::unique_ptr<ExprNode>> formulas_;
};

}  // namespace

IdentitySpec load_identity_spec(const std::string& json_text) {
    json j = json::parse(json_text);
    IdentitySpec spec;
    spec.name = j.value("name", "identity");
    spec.identity = j.at("identity").get<std::string>();
    spec.lo = j.at("range")[0].get<long>();
    spec.hi = j.at("range")[1].get<long>();
    for (auto& [name, sj] : j.at("sequences").items()) {
        SequenceSource src;
        std::string kind = sj.at("source").get<std::string>();
        if (kind == "fixture") {
            src.kind = SequenceSource::Kind::Fixture;
            src.fixture_id = sj.at("id").get<std::string>();
        } else if (kind == "unroll") {
            src.kind = SequenceSource::Kind::Unroll;
            src.operator_text = sj.at("operator").get<std::string>();
            src.offset = rat_from_json(sj.at("offset"));
            for (const auto& v : sj.at("initial")) src.initial.push_back(rat_from_json(v));
            src.count = sj.value("count", 0);
        } else if (kind == "formula") {
            src.kind = SequenceSource::Kind::Formula;
            src.formula = sj.at("expr").get<std::string>();
        } else {
            throw error("unknown sequence source '" + kind + "'");
        }
        spec.sequences.emplace(name, std::move(src));
    }
    return spec;
}

IdentitySpec load_identity_spec_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw error("cannot open identity spec " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return load_identity_spec(ss.str());
}

VerifyReport verify_identity(const IdentitySpec& spec, const std::string& fixtures_dir,
                             bool allow_net) {
    VerifyReport report;
    report.name = spec.name;
    report.lo = spec.lo;
    report.hi = spec.hi;
    size_t eq = spec.identity.find('=');
    if (eq == std::string::npos) throw error("identity must contain '='");
    auto lhs = parse_expression(spec.identity.substr(0, eq));
    auto rhs = parse_expression(spec.identity.substr(eq + 1));
    SequenceEvaluator ev(spec, fixtures_dir, allow_net);
    for (long n = spec.lo; n <= spec.hi; ++n) {
        Rational l = ev.eval(*lhs, Rational(n), 0);
        Rational r = ev.eval(*rhs, Rational(n), 0);
        if (l != r) {
            report.pass = false;
            report.first_failure = n;
            report.detail = "mismatch at n = " + std::to_string(n) + ": " + l.get_str() +
                            " != " + r.get_str();
            return report;
        }
    }
    report.pass = true;
    return report;
}

}  // namespace ore
