#include "ore/sequence.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ore/solve.hpp"

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace ore {

SequenceGrid::SequenceGrid(Rational offset, std::vector<Rational> values, Provenance prov)
    : offset_(std::move(offset)), values_(std::move(values)), prov_(prov) {
    if (offset_.get_den() != 1 && offset_.get_den() != 2)
        throw error("grid offset must lie in (1/2)Z");
}

bool SequenceGrid::has(const Rational& point) const {
    Rational d = point - offset_;
    if (d.get_den() != 1 || d < 0) return false;
    return d.get_num() < Integer(static_cast<long>(values_.size()));
}

const Rational& SequenceGrid::at(const Rational& point) const {
    if (!has(point)) throw error("sequence value not available at " + Rational(point).get_str());
    return values_[to_long(Rational(point - offset_))];
}

SequenceGrid unroll(const OreOperator& l, const SequenceGrid& initials, size_t count) {
    int n = l.order();
    if (n < 1) throw error("unroll needs an operator of positive order");
    if (initials.size() < static_cast<size_t>(n))
        throw error("unroll needs ord(L) consecutive initial values");
    std::vector<Polynomial> ps = polynomial_coefficients(l);
    std::vector<Rational> vals = initials.values();
    const Rational& off = initials.offset();
    while (vals.size() < count) {
        long k = static_cast<long>(vals.size());
        Rational x = off + Rational(k - n);
        Rational lead = ps[n](x);
        if (lead == 0)
            throw error("leading coefficient vanishes at index " + Rational(x + Rational(n)).get_str());
        Rational acc = 0;
        for (int i = 0; i < n; ++i) acc += ps[i](x) * vals[k - n + i];
        vals.push_back(-acc / lead);
    }
    return SequenceGrid(off, std::move(vals), Provenance::Unrolled);
}

std::vector<Rational> apply_to_grid(const OreOperator& l, const SequenceGrid& grid) {
    int n = l.order();
    std::vector<Rational> out;
    if (n < 0 || grid.size() < static_cast<size_t>(n)) return out;
    for (size_t k = 0; k + n < grid.size(); ++k) {
        Rational x = grid.offset() + Rational(static_cast<long>(k));
        Rational acc = 0;
        bool ok = true;
        for (int i = 0; i <= n; ++i) {
            const RationalFunction& c = l.coeff(i);
            if (c.is_zero()) continue;
            if (!c.defined_at(x)) {
                ok = false;
                break;
            }
            acc += c(x) * grid.at(x + Rational(i));
        }
        if (ok) out.push_back(acc);
    }
    return out;
}

SequenceGrid parse_bfile(const std::string& content, const std::string& what) {
    std::istringstream in(content);
    std::string line;
    std::vector<Rational> values;
    bool have_first = false;
    long first = 0, expect = 0;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '#') continue;
        std::istringstream ls(line);
        std::string ns, vs;
        if (!(ls >> ns >> vs))
            throw error(what + ": malformed b-file line " + std::to_string(lineno));
        long idx;
        Integer val;
        try {
            idx = std::stol(ns);
            val = Integer(vs);
        } catch (const std::exception&) {
            throw error(what + ": malformed b-file line " + std::to_string(lineno));
        }
        if (!have_first) {
            first = expect = idx;
            have_first = true;
        } else if (idx != expect) {
            throw error(what + ": non-consecutive index at line " + std::to_string(lineno));
        }
        ++expect;
        values.push_back(Rational(val));
    }
    if (!have_first) throw error(what + ": empty b-file");
    return SequenceGrid(Rational(first), std::move(values), Provenance::Fixture);
}

SequenceGrid fetch_bfile(const std::string& id, const std::string& fixtures_dir, bool allow_net) {
    if (id.size() < 2 || id[0] != 'A')
        throw error("sequence id must look like A000000, got '" + id + "'");
    for (size_t i = 1; i < id.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(id[i])))
            throw error("sequence id must look like A000000, got '" + id + "'");
    std::string digits = id.substr(1);
    std::string path = fixtures_dir + "/b" + digits + ".txt";
    {
        std::ifstream f(path);
        if (f) {
            std::stringstream ss;
            ss << f.rdbuf();
            return parse_bfile(ss.str(), id);
        }
    }
    if (!allow_net) throw error("fixture for " + id + " not found at " + path + " (network disabled)");
    httplib::SSLClient cli("oeis.org");
    cli.set_follow_location(true);
    auto res = cli.Get(("/" + id + "/b" + digits + ".txt").c_str());
    if (!res || res->status != 200)
        throw error("failed to fetch b-file for " + id + " from oeis.org");
    SequenceGrid grid = parse_bfile(res->body, id);
    std::ofstream out(path);
    if (out) out << res->body;
    return grid;
}

}  // namespace ore
