#include "hopfinv/hopf.hpp"

#include <algorithm>

#include "hopfinv/errors.hpp"

namespace hopfinv {

DenseInt kron(const DenseInt& a, const DenseInt& b) {
    DenseInt out(a.rows * b.rows, a.cols * b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) {
            if (a(i, j) == 0) continue;
            for (std::size_t k = 0; k < b.rows; ++k)
                for (std::size_t l = 0; l < b.cols; ++l) {
                    if (b(k, l) == 0) continue;
                    out(i * b.rows + k, j * b.cols + l) = a(i, j) * b(k, l);
                }
        }
    return out;
}

DenseInt tensor_flip(std::size_t c1, std::size_t c2) {
    DenseInt p(c1 * c2, c1 * c2);
    for (std::size_t i = 0; i < c1; ++i)
        for (std::size_t j = 0; j < c2; ++j) p(j * c1 + i, i * c2 + j) = 1;
    return p;
}

namespace {

void check(ValidationReport& rep, const HopfAlgebra& h, const std::string& axiom,
           const DenseInt& lhs, const DenseInt& rhs) {
    rep.checked.push_back(axiom);
    if (lhs.rows != rhs.rows || lhs.cols != rhs.cols) {
        rep.failures.push_back({axiom, "shape mismatch"});
        return;
    }
    for (std::size_t i = 0; i < lhs.rows; ++i)
        for (std::size_t j = 0; j < lhs.cols; ++j)
            if (h.scalar.reduce(lhs(i, j) - rhs(i, j)) != 0) {
                rep.failures.push_back({axiom, "entry (" + std::to_string(i) + "," +
                                                   std::to_string(j) + "): " +
                                                   lhs(i, j).get_str() + " != " +
                                                   rhs(i, j).get_str()});
                return;
            }
}

} // namespace

ValidationReport validate_axioms(const HopfAlgebra& h) {
    const std::size_t c = h.rank;
    const DenseInt id = DenseInt::identity(c);
    const DenseInt& m = h.mult;
    const DenseInt& d = h.comult;
    const DenseInt& e = h.counit;
    const DenseInt& s = h.antipode;
    const DenseInt& u = h.unit;

    ValidationReport rep;
    check(rep, h, "associativity", m * kron(m, id), m * kron(id, m));
    check(rep, h, "left unit", m * kron(u, id), id);
    check(rep, h, "right unit", m * kron(id, u), id);
    check(rep, h, "commutativity", m * tensor_flip(c, c), m);
    check(rep, h, "coassociativity", kron(d, id) * d, kron(id, d) * d);
    check(rep, h, "left counit", kron(e, id) * d, id);
    check(rep, h, "right counit", kron(id, e) * d, id);
    // Delta is an algebra map: Delta(xy) = Delta(x)Delta(y)
    DenseInt mult_cc = kron(m, m) * kron(kron(id, tensor_flip(c, c)), id); // mult of C (x) C
    check(rep, h, "bialgebra (comult multiplicative)", d * m, mult_cc * kron(d, d));
    check(rep, h, "bialgebra (comult of unit)", d * u, kron(u, u));
    // epsilon is an algebra map
    check(rep, h, "bialgebra (counit multiplicative)", e * m, kron(e, e));
    DenseInt one(1, 1);
    one(0, 0) = 1;
    check(rep, h, "bialgebra (counit of unit)", e * u, one);
    // antipode axiom
    check(rep, h, "antipode (left)", m * kron(s, id) * d, u * e);
    check(rep, h, "antipode (right)", m * kron(id, s) * d, u * e);
    return rep;
}

nlohmann::json ValidationReport::to_json() const {
    nlohmann::json f = nlohmann::json::array();
    for (const AxiomFailure& x : failures) f.push_back({{"axiom", x.axiom}, {"witness", x.witness}});
    return {{"checked", checked}, {"failures", f}, {"pass", all_pass()}};
}

HopfAlgebra mu_n(std::size_t n) {
    if (n < 1) throw BadInput("mu_n: n must be >= 1");
    HopfAlgebra h;
    h.scalar = BaseScalar::integers();
    h.rank = n;
    h.name = "mu_" + std::to_string(n);
    h.mult = DenseInt(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) h.mult((i + j) % n, i * n + j) = 1;
    h.unit = DenseInt(n, 1);
    h.unit(0, 0) = 1;
    h.comult = DenseInt(n * n, n);
    for (std::size_t k = 0; k < n; ++k) h.comult(k * n + k, k) = 1; // x^k grouplike
    h.counit = DenseInt(1, n);
    for (std::size_t k = 0; k < n; ++k) h.counit(0, k) = 1;
    h.antipode = DenseInt(n, n);
    for (std::size_t k = 0; k < n; ++k) h.antipode((n - k) % n, k) = 1;
    return h;
}

HopfAlgebra constant_group(const GroupTable& g, const std::string& name) {
    const std::size_t n = g.order();
    HopfAlgebra h;
    h.scalar = BaseScalar::integers();
    h.rank = n;
    h.name = name.empty() ? "const_" + std::to_string(n) : name;
    h.mult = DenseInt(n, n * n);
    for (std::size_t i = 0; i < n; ++i) h.mult(i, i * n + i) = 1; // pointwise product
    h.unit = DenseInt(n, 1);
    for (std::size_t i = 0; i < n; ++i) h.unit(i, 0) = 1; // constant function 1
    h.comult = DenseInt(n * n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) h.comult(a * n + b, g.mul(a, b)) = 1;
    h.counit = DenseInt(1, n);
    h.counit(0, g.identity) = 1; // evaluation at the identity
    h.antipode = DenseInt(n, n);
    for (std::size_t a = 0; a < n; ++a) h.antipode(g.inverse(a), a) = 1;
    return h;
}

HopfAlgebra alpha_p(const Int& p) {
    if (!is_prime(p)) throw BadInput("alpha_p: p must be prime");
    const std::size_t n = p.get_ui();
    HopfAlgebra h;
    h.scalar = BaseScalar::prime_field(p);
    h.rank = n;
    h.name = "alpha_" + p.get_str();
    h.mult = DenseInt(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i + j < n) h.mult(i + j, i * n + j) = 1; // x^p = 0 truncation
    h.unit = DenseInt(n, 1);
    h.unit(0, 0) = 1;
    h.comult = DenseInt(n * n, n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j <= k; ++j) {
            Int binom;
            mpz_bin_uiui(binom.get_mpz_t(), k, j);
            h.comult(j * n + (k - j), k) = h.scalar.reduce(binom);
        }
    h.counit = DenseInt(1, n);
    h.counit(0, 0) = 1;
    h.antipode = DenseInt(n, n);
    for (std::size_t k = 0; k < n; ++k) h.antipode(k, k) = h.scalar.reduce(k % 2 ? Int(-1) : Int(1));
    return h;
}

HopfAlgebra base_change_hopf(const HopfAlgebra& h, const BaseScalar& scalar) {
    HopfAlgebra out = h;
    out.scalar = scalar;
    out.mult.reduce_inplace(scalar);
    out.unit.reduce_inplace(scalar);
    out.comult.reduce_inplace(scalar);
    out.counit.reduce_inplace(scalar);
    out.antipode.reduce_inplace(scalar);
    if (!h.name.empty()) out.name = h.name + "@" + scalar.to_string();
    return out;
}

std::optional<HopfAlgebra> builtin_hopf(const std::string& name) {
    auto parse_suffix = [](const std::string& s, const std::string& prefix) -> long {
        if (s.rfind(prefix, 0) != 0) return -1;
        try {
            std::size_t pos;
            long v = std::stol(s.substr(prefix.size()), &pos);
            if (pos != s.size() - prefix.size()) return -1;
            return v;
        } catch (...) {
            return -1;
        }
    };
    if (name == "const_Z2xZ2")
        return constant_group(GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2)),
                              "const_Z2xZ2");
    if (long n = parse_suffix(name, "mu_"); n >= 1) return mu_n(static_cast<std::size_t>(n));
    if (long p = parse_suffix(name, "alpha_"); p >= 2) return alpha_p(Int(p));
    if (long n = parse_suffix(name, "const_Z"); n >= 1)
        return constant_group(GroupTable::cyclic(static_cast<std::size_t>(n)), name);
    return std::nullopt;
}

namespace {

nlohmann::json dense_to_json(const DenseInt& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(m(i, j).get_str());
        rows.push_back(row);
    }
    return rows;
}

DenseInt dense_from_json(const nlohmann::json& j, std::size_t rows, std::size_t cols,
                         const std::string& field) {
    if (!j.is_array() || j.size() != rows)
        throw BadInput("hopf: field \"" + field + "\" must be a " + std::to_string(rows) + "x" +
                       std::to_string(cols) + " array");
    DenseInt m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw BadInput("hopf: field \"" + field + "\" row " + std::to_string(i) +
                           " has wrong length");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!j[i][c].is_string())
                throw BadInput("hopf: field \"" + field + "\" entries must be decimal strings");
            try {
                m(i, c) = Int(j[i][c].get<std::string>());
            } catch (const std::invalid_argument&) {
                throw BadInput("hopf: bad integer in field \"" + field + "\"");
            }
        }
    }
    return m;
}

} // namespace

nlohmann::json HopfAlgebra::to_json() const {
    return {{"scalar", scalar.to_string()},
            {"rank", rank},
            {"mult", dense_to_json(mult)},
            {"unit", dense_to_json(unit)},
            {"comult", dense_to_json(comult)},
            {"counit", dense_to_json(counit)},
            {"antipode", dense_to_json(antipode)},
            {"name", name}};
}

HopfAlgebra HopfAlgebra::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw BadInput("hopf: expected a JSON object");
    static const std::vector<std::string> known = {"scalar", "rank",   "mult",     "unit",
                                                   "comult", "counit", "antipode", "name"};
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw BadInput("hopf: unknown field \"" + key + "\"");
    for (const std::string& k : known)
        if (k != "name" && !j.contains(k)) throw BadInput("hopf: missing field \"" + k + "\"");
    HopfAlgebra h;
    if (!j["scalar"].is_string()) throw BadInput("hopf: scalar must be a string");
    h.scalar = BaseScalar::parse(j["scalar"].get<std::string>());
    if (!json_is_size(j["rank"])) throw BadInput("hopf: rank must be a nonnegative integer");
    h.rank = j["rank"].get<std::size_t>();
    std::size_t c = h.rank;
    h.mult = dense_from_json(j["mult"], c, c * c, "mult");
    h.unit = dense_from_json(j["unit"], c, 1, "unit");
    h.comult = dense_from_json(j["comult"], c * c, c, "comult");
    h.counit = dense_from_json(j["counit"], 1, c, "counit");
    h.antipode = dense_from_json(j["antipode"], c, c, "antipode");
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw BadInput("hopf: name must be a string");
        h.name = j["name"].get<std::string>();
    }
    return h;
}

} // namespace hopfinv
