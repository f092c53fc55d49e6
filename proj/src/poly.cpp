#include "hopfinv/poly.hpp"

#include <algorithm>

#include "hopfinv/errors.hpp"

namespace hopfinv {

unsigned total_degree(const Exponents& e) {
    unsigned d = 0;
    for (unsigned x : e) d += x;
    return d;
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // within a degree: plain lexicographic comparison of exponent vectors,
    // so x0^2 > x0 x1 > x1^2
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void Poly::add_term(const Exponents& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

Poly Poly::constant(std::size_t nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Poly Poly::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw DimensionMismatch("poly: variable index out of range");
    Poly p(nvars);
    Exponents e(nvars, 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

Poly Poly::monomial(const Exponents& e, const Rat& c) {
    Poly p(e.size());
    p.add_term(e, c);
    return p;
}

unsigned Poly::degree() const {
    return terms_.empty() ? 0 : total_degree(terms_.rbegin()->first);
}

bool Poly::is_homogeneous(unsigned d) const {
    for (const auto& [e, c] : terms_)
        if (total_degree(e) != d) return false;
    return true;
}

Rat Poly::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly& Poly::operator+=(const Poly& o) {
    if (nvars_ != o.nvars_) throw DimensionMismatch("poly: variable sets differ");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (nvars_ != o.nvars_) throw DimensionMismatch("poly: variable sets differ");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Poly Poly::operator+(const Poly& o) const {
    Poly p = *this;
    p += o;
    return p;
}

Poly Poly::operator-(const Poly& o) const {
    Poly p = *this;
    p -= o;
    return p;
}

Poly Poly::operator*(const Poly& o) const {
    if (nvars_ != o.nvars_) throw DimensionMismatch("poly: variable sets differ");
    Poly p(nvars_);
    Exponents e(nvars_);
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

Poly Poly::operator*(const Rat& c) const {
    Poly p(nvars_);
    if (c == 0) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

Poly Poly::operator-() const { return *this * Rat(-1); }

Poly Poly::derivative(std::size_t var) const {
    if (var >= nvars_) throw DimensionMismatch("poly: variable index out of range");
    Poly p(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        p.add_term(d, c * Rat(e[var]));
    }
    return p;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("poly: evaluation point has wrong arity");
    Rat out = 0;
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        out += term;
    }
    return out;
}

Int Poly::evaluate_int(const std::vector<Int>& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("poly: evaluation point has wrong arity");
    Int out = 0;
    for (const auto& [e, c] : terms_) {
        if (c.get_den() != 1) throw BadInput("poly: integer evaluation needs integer coefficients");
        Int term = c.get_num();
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
        out += term;
    }
    return out;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (images.size() != nvars_) throw DimensionMismatch("poly: substitution needs one image per variable");
    const std::size_t target = images.empty() ? 0 : images[0].nvars();
    Poly out(target);
    for (const auto& [e, c] : terms_) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (unsigned k = 0; k < e[i]; ++k) term = term * images[i];
        out += term;
    }
    return out;
}

std::vector<Rat> Poly::coefficient_vector(
    const std::map<Exponents, std::size_t, GrlexLess>& index, std::size_t width) const {
    std::vector<Rat> v(width, Rat(0));
    for (const auto& [e, c] : terms_) {
        auto it = index.find(e);
        if (it == index.end()) throw DimensionMismatch("poly: monomial outside the indexed basis");
        v[it->second] = c;
    }
    return v;
}

nlohmann::json Poly::to_json() const {
    nlohmann::json ts = nlohmann::json::array();
    for (const auto& [e, c] : terms_) ts.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
    return {{"nvars", nvars_}, {"terms", ts}};
}

Poly Poly::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("terms") || j.size() != 2)
        throw BadInput("poly: expected {nvars, terms}");
    if (!json_is_size(j["nvars"])) throw BadInput("poly: nvars must be a nonnegative integer");
    Poly p(j["nvars"].get<std::size_t>());
    if (!j["terms"].is_array()) throw BadInput("poly: terms must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("exponents") || !t.contains("coefficient") ||
            t.size() != 2)
            throw BadInput("poly: each term must be {exponents, coefficient}");
        Exponents e = t["exponents"].get<Exponents>();
        if (e.size() != p.nvars_) throw BadInput("poly: exponent vector has wrong arity");
        if (!t["coefficient"].is_string()) throw BadInput("poly: coefficients are strings");
        Rat c(t["coefficient"].get<std::string>());
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

std::vector<Exponents> monomials_of_degree(std::size_t nvars, unsigned d) {
    std::vector<Exponents> out;
    if (nvars == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    Exponents cur(nvars, 0);
    // enumerate recursively, then sort into grlex order
    auto rec = [&](auto&& self, std::size_t i, unsigned rem) -> void {
        if (i + 1 == nvars) {
            cur[i] = rem;
            out.push_back(cur);
            return;
        }
        for (unsigned k = 0; k <= rem; ++k) {
            cur[i] = k;
            self(self, i + 1, rem - k);
        }
        cur[i] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), GrlexLess());
    return out;
}

std::vector<Exponents> monomials_of_bidegree(std::size_t n1, std::size_t n2, unsigned d1,
                                             unsigned d2) {
    std::vector<Exponents> out;
    for (const Exponents& a : monomials_of_degree(n1, d1))
        for (const Exponents& b : monomials_of_degree(n2, d2)) {
            Exponents e = a;
            e.insert(e.end(), b.begin(), b.end());
            out.push_back(e);
        }
    std::sort(out.begin(), out.end(), GrlexLess());
    return out;
}

void EchelonBasisQ::reduce(std::vector<Rat>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rat& c = v[pivots_[k]];
        if (c == 0) continue;
        Rat f = c; // pivot entries are 1
        for (std::size_t j = pivots_[k]; j < width_; ++j)
            if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
    }
}

bool EchelonBasisQ::insert(std::vector<Rat> v) {
    if (v.size() != width_) throw DimensionMismatch("echelon: row width mismatch");
    reduce(v);
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (v[j] != 0) {
            p = j;
            break;
        }
    if (p == width_) return false;
    Rat inv = 1 / v[p];
    for (std::size_t j = p; j < width_; ++j) v[j] *= inv;
    // clear the new pivot column in existing rows
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rat& c = rows_[k][p];
        if (c == 0) continue;
        Rat f = c;
        for (std::size_t j = p; j < width_; ++j)
            if (v[j] != 0) rows_[k][j] -= f * v[j];
    }
    // keep rows sorted by pivot column
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

bool EchelonBasisQ::contains(std::vector<Rat> v) const {
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

std::vector<std::size_t> EchelonBasisQ::complement() const {
    std::vector<std::size_t> out;
    std::size_t k = 0;
    for (std::size_t j = 0; j < width_; ++j) {
        if (k < pivots_.size() && pivots_[k] == j) {
            ++k;
            continue;
        }
        out.push_back(j);
    }
    return out;
}

namespace {

using u64 = unsigned long long;

u64 mulmod61(u64 a, u64 b) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % EchelonBasisMod::kPrime);
}

u64 powmod61(u64 a, u64 e) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod61(r, a);
        a = mulmod61(a, a);
        e >>= 1;
    }
    return r;
}

u64 reduce61(const Int& x) {
    static const Int prime(static_cast<unsigned long>(EchelonBasisMod::kPrime));
    Int m = x % prime;
    if (m < 0) m += prime;
    return m.get_ui();
}

} // namespace

bool EchelonBasisMod::insert(const std::vector<Int>& v) {
    if (v.size() != width_) throw DimensionMismatch("echelon: row width mismatch");
    std::vector<u64> w(width_);
    for (std::size_t j = 0; j < width_; ++j) w[j] = reduce61(v[j]);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (w[p] == 0) continue;
        const u64 f = kPrime - w[p]; // pivot entries are 1: w <- w - w[p]*row
        const std::vector<u64>& row = rows_[k];
        for (std::size_t j = p; j < width_; ++j)
            if (row[j]) w[j] = (w[j] + mulmod61(f, row[j])) % kPrime;
    }
    std::size_t p = width_;
    for (std::size_t j = 0; j < width_; ++j)
        if (w[j] != 0) {
            p = j;
            break;
        }
    if (p == width_) return false;
    const u64 inv = powmod61(w[p], kPrime - 2);
    for (std::size_t j = p; j < width_; ++j) w[j] = mulmod61(w[j], inv);
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(w));
    pivots_.insert(pivots_.begin() + pos, p);
    return true;
}

} // namespace hopfinv
