#include "hopfinv/comodule.hpp"

#include "hopfinv/errors.hpp"

namespace hopfinv {

namespace {

// iota : M -> M (x) C, m |-> m (x) 1, as an (m*c) x m matrix.
DenseInt iota_matrix(const HopfAlgebra& h, std::size_t m) {
    DenseInt out(m * h.rank, m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t j = 0; j < h.rank; ++j) out(k * h.rank + j, k) = h.unit(j, 0);
    return out;
}

Int pow_sz(std::size_t base, std::size_t e) {
    Int r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= static_cast<unsigned long>(base);
    return r;
}

} // namespace

Comodule trivial_comodule(const HopfAlgebra& h, std::size_t rank) {
    Comodule m;
    m.hopf = h;
    m.rank = rank;
    m.coaction = iota_matrix(h, rank);
    return m;
}

ValidationReport validate_comodule(const Comodule& m) {
    const std::size_t c = m.hopf.rank;
    ValidationReport rep;
    if (m.coaction.rows != m.rank * c || m.coaction.cols != m.rank)
        throw DimensionMismatch("validate_comodule: coaction has wrong shape");
    auto record = [&](const std::string& axiom, const DenseInt& lhs, const DenseInt& rhs) {
        rep.checked.push_back(axiom);
        for (std::size_t j = 0; j < lhs.cols; ++j)
            for (std::size_t i = 0; i < lhs.rows; ++i)
                if (m.scalar().reduce(lhs(i, j) - rhs(i, j)) != 0) {
                    rep.failures.push_back({axiom, "fails on basis vector e_" + std::to_string(j)});
                    return;
                }
    };
    // (id (x) eps) omega = id
    record("counit", kron(DenseInt::identity(m.rank), m.hopf.counit) * m.coaction,
           DenseInt::identity(m.rank));
    // (omega (x) id) omega = (id (x) Delta) omega
    record("coassociativity", kron(m.coaction, DenseInt::identity(c)) * m.coaction,
           kron(DenseInt::identity(m.rank), m.hopf.comult) * m.coaction);
    return rep;
}

Invariants invariants(const Comodule& m) {
    DenseInt w = m.coaction - iota_matrix(m.hopf, m.rank);
    Invariants out;
    out.scalar = m.scalar();
    switch (out.scalar.tag()) {
    case ScalarTag::Int: {
        out.generators = kernel_int(w);
        out.structure.scalar = out.scalar;
        out.structure.free_rank = out.generators.cols;
        break;
    }
    case ScalarTag::Rat: {
        out.generators = kernel_basis(IntMatrix::from_dense(w), out.scalar).to_dense();
        out.structure.scalar = out.scalar;
        out.structure.free_rank = out.generators.cols;
        break;
    }
    case ScalarTag::Fp: {
        out.generators = kernel_fp(w, out.scalar.modulus());
        out.structure.scalar = out.scalar;
        out.structure.free_rank = out.generators.cols;
        break;
    }
    case ScalarTag::IntMod: {
        const Int& n = out.scalar.modulus();
        out.generators = kernel_mod(w, n);
        out.lift_lattice = kernel_lift_lattice(w, n);
        FpModule q = quotient_of_lattice_mod(out.lift_lattice, DenseInt(m.rank, 0), n);
        out.structure.scalar = out.scalar;
        // present the finite group K/nZ^m as cyclic orders
        out.structure.free_rank = 0;
        out.structure.cyclic = q.torsion();
        break;
    }
    }
    return out;
}

Comodule action_to_coaction(const GroupTable& g, const std::vector<DenseInt>& rep) {
    const std::size_t n = g.order();
    if (rep.size() != n) throw NotARepresentation("need one matrix per group element");
    const std::size_t m = rep.empty() ? 0 : rep[0].rows;
    for (const DenseInt& r : rep)
        if (r.rows != m || r.cols != m) throw NotARepresentation("matrices must be m x m");
    if (!(rep[g.identity] == DenseInt::identity(m)))
        throw NotARepresentation("identity element must act as the identity matrix");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (!(rep[a] * rep[b] == rep[g.mul(a, b)]))
                throw NotARepresentation("relation fails at (" + std::to_string(a) + "," +
                                         std::to_string(b) + ")");
    Comodule out;
    out.hopf = constant_group(g);
    out.rank = m;
    out.coaction = DenseInt(m * n, m);
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t gi = 0; gi < n; ++gi)
            for (std::size_t i = 0; i < m; ++i) out.coaction(i * n + gi, k) = rep[gi](i, k);
    return out;
}

CobarComplex cobar_complex(const Comodule& m, std::size_t n_max) {
    if (n_max < 1) throw BadInput("cobar_complex: n_max must be >= 1");
    const std::size_t c = m.hopf.rank;
    if (pow_sz(c, n_max) * static_cast<unsigned long>(m.rank) > 10000)
        throw TooLarge("cobar_complex: top term rank exceeds the guard of 10^4");
    {
        ValidationReport v = validate_comodule(m);
        if (!v.all_pass()) throw BadInput("cobar_complex: comodule axioms fail");
    }
    CobarComplex out;
    out.comodule = m;
    out.n_max = n_max;
    std::size_t rank_n = m.rank;
    for (std::size_t n = 0; n <= n_max; ++n) {
        out.term_ranks.push_back(rank_n);
        rank_n *= c;
    }
    const DenseInt id_c = DenseInt::identity(c);
    for (std::size_t n = 0; n < n_max; ++n) {
        const std::size_t cn = out.term_ranks[n] / m.rank; // c^n
        DenseInt delta(out.term_ranks[n + 1], out.term_ranks[n]);
        // (-1)^{n+1} omega (x) 1
        {
            DenseInt face = kron(m.coaction, DenseInt::identity(cn));
            int sign = (n + 1) % 2 == 0 ? 1 : -1;
            for (std::size_t idx = 0; idx < delta.a.size(); ++idx)
                delta.a[idx] += sign > 0 ? face.a[idx] : Int(-face.a[idx]);
        }
        // sum_i (-1)^{n-i} 1_M (x) 1^{(x)i} (x) Delta (x) 1^{(x)n-i-1}
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t left = m.rank;
            for (std::size_t t = 0; t < i; ++t) left *= c;
            std::size_t right = 1;
            for (std::size_t t = 0; t + i + 1 < n; ++t) right *= c;
            DenseInt face = kron(DenseInt::identity(left),
                                 kron(m.hopf.comult, DenseInt::identity(right)));
            int sign = (n - i) % 2 == 0 ? 1 : -1;
            for (std::size_t idx = 0; idx < delta.a.size(); ++idx)
                delta.a[idx] += sign > 0 ? face.a[idx] : Int(-face.a[idx]);
        }
        // + 1 (x) 1^{(x)n} (x) u
        {
            DenseInt face = kron(DenseInt::identity(out.term_ranks[n]), m.hopf.unit);
            for (std::size_t idx = 0; idx < delta.a.size(); ++idx) delta.a[idx] += face.a[idx];
        }
        delta.reduce_inplace(m.scalar());
        out.differentials.push_back(std::move(delta));
    }
    for (std::size_t n = 0; n + 1 < n_max; ++n)
        if (!(out.differentials[n + 1] * out.differentials[n]).is_zero_over(m.scalar()))
            throw NotAComplex("cobar_complex: delta^" + std::to_string(n + 1) + " o delta^" +
                              std::to_string(n) + " != 0");
    return out;
}

FpModule cohomology(const CobarComplex& c, std::size_t i) {
    if (i >= c.n_max) throw BadInput("cohomology: need i < n_max");
    if (c.comodule.scalar().tag() != ScalarTag::Int)
        throw BadInput("cohomology: integral complexes only");
    DenseInt d_in = i == 0 ? DenseInt(c.term_ranks[0], 0) : c.differentials[i - 1];
    return complex_cohomology(d_in, c.differentials[i]);
}

FpModule group_cohomology_oracle(const GroupTable& g, const std::vector<DenseInt>& rep,
                                 std::size_t i) {
    if (i > 2) throw BadInput("group_cohomology_oracle: i <= 2 only");
    const std::size_t n = g.order();
    const std::size_t m = rep.empty() ? 0 : rep[0].rows;
    const DenseInt id = DenseInt::identity(m);
    // d0 : M -> Map(G, M), (d0 v)(a) = a.v - v
    DenseInt d0(n * m, m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t cc = 0; cc < m; ++cc) d0(a * m + r, cc) = rep[a](r, cc) - id(r, cc);
    // d1 : Map(G, M) -> Map(G^2, M), (d1 f)(a,b) = a.f(b) - f(ab) + f(a)
    DenseInt d1(n * n * m, n * m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            std::size_t row0 = (a * n + b) * m;
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t cc = 0; cc < m; ++cc) d1(row0 + r, b * m + cc) += rep[a](r, cc);
                d1(row0 + r, g.mul(a, b) * m + r) -= 1;
                d1(row0 + r, a * m + r) += 1;
            }
        }
    if (i == 0) return complex_cohomology(DenseInt(m, 0), d0);
    if (i == 1) return complex_cohomology(d0, d1);
    // d2 : Map(G^2, M) -> Map(G^3, M),
    // (d2 f)(a,b,c) = a.f(b,c) - f(ab,c) + f(a,bc) - f(a,b)
    DenseInt d2(n * n * n * m, n * n * m);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t cg = 0; cg < n; ++cg) {
                std::size_t row0 = ((a * n + b) * n + cg) * m;
                for (std::size_t r = 0; r < m; ++r) {
                    for (std::size_t cc = 0; cc < m; ++cc)
                        d2(row0 + r, (b * n + cg) * m + cc) += rep[a](r, cc);
                    d2(row0 + r, (g.mul(a, b) * n + cg) * m + r) -= 1;
                    d2(row0 + r, (a * n + g.mul(b, cg)) * m + r) += 1;
                    d2(row0 + r, (a * n + b) * m + r) -= 1;
                }
            }
    return complex_cohomology(d1, d2);
}

Comodule base_change_comodule(const Comodule& m, const BaseScalar& scalar) {
    Comodule out;
    out.hopf = base_change_hopf(m.hopf, scalar);
    out.rank = m.rank;
    out.coaction = m.coaction;
    out.coaction.reduce_inplace(scalar);
    return out;
}

RhoReport rho(const BaseScalar& s, const Comodule& m) {
    if (m.scalar().tag() != ScalarTag::Int) throw BadInput("rho: comodule must live over Z");
    Invariants over_z = invariants(m);
    const DenseInt& b = over_z.generators; // m x k
    const std::size_t k = b.cols;
    Comodule ms = base_change_comodule(m, s);
    Invariants target = invariants(ms);

    RhoReport out;
    out.scalar = s;
    out.cokernel.scalar = s;
    switch (s.tag()) {
    case ScalarTag::Int:
    case ScalarTag::Rat: {
        DenseRat x;
        bool ok = solve_rat(DenseRat::from_int(target.generators), DenseRat::from_int(b), x);
        if (!ok) throw OracleDisagreement("rho: invariant lattice not inside Q-invariants");
        out.matrix = x;
        std::size_t r = rank_rat(DenseRat::from_int(b));
        out.injective = r == k;
        out.cokernel.free_rank = target.structure.free_rank - r;
        out.surjective = out.cokernel.free_rank == 0;
        break;
    }
    case ScalarTag::Fp: {
        const Int& p = s.modulus();
        DenseInt x;
        if (!solve_fp(target.generators, b, p, x))
            throw OracleDisagreement("rho: invariant lattice not inside F_p-invariants");
        out.matrix = DenseRat::from_int(x);
        std::size_t r = rank_fp(b, p);
        out.injective = r == k;
        out.cokernel.free_rank = target.structure.free_rank - r;
        out.surjective = out.cokernel.free_rank == 0;
        break;
    }
    case ScalarTag::IntMod: {
        const Int& n = s.modulus();
        // injectivity of B : (Z/n)^k -> (Z/n)^m
        SmithForm snf = smith_normal_form(IntMatrix::from_dense(b));
        out.injective = true;
        for (std::size_t j = 0; j < k; ++j) {
            Int dj = j < snf.invariant_factors.size() ? snf.invariant_factors[j] : Int(0);
            if (gcd(dj, n) != 1) out.injective = false;
        }
        // cokernel: lattice of invariants mod the image of B and n Z^m
        FpModule q = quotient_of_lattice_mod(target.lift_lattice, b, n);
        out.cokernel.free_rank = 0;
        out.cokernel.cyclic = q.torsion();
        out.surjective = out.cokernel.is_zero();
        // matrix of rho in the generating sets, via an integral lift
        if (target.generators.cols > 0 || k == 0) {
            DenseInt nid(m.rank, m.rank);
            for (std::size_t i = 0; i < m.rank; ++i) nid(i, i) = n;
            DenseInt lift = solve_int(target.generators.hcat(nid), b);
            out.matrix = DenseRat(target.generators.cols, k);
            for (std::size_t i = 0; i < out.matrix.rows; ++i)
                for (std::size_t j = 0; j < k; ++j) out.matrix(i, j) = Rat(s.reduce(lift(i, j)));
        }
        break;
    }
    }
    return out;
}

UcsReport universal_coefficient_check(const Comodule& m, const BaseScalar& s) {
    if (m.scalar().tag() != ScalarTag::Int)
        throw BadInput("universal_coefficient_check: comodule must live over Z");
    UcsReport out;
    out.scalar = s;
    Invariants over_z = invariants(m);
    out.tensored_invariants =
        tensor_module(FpModule::free_of_rank(over_z.generators.cols), s);
    Comodule ms = base_change_comodule(m, s);
    out.invariants_of_tensor = invariants(ms).structure;
    CobarComplex cc = cobar_complex(m, 2);
    out.h1 = cohomology(cc, 1);
    out.tor_term = tor1(s, out.h1);
    out.rho = rho(s, m);
    out.exact = out.rho.injective && out.rho.cokernel.isomorphic(out.tor_term);
    return out;
}

// --- JSON -----------------------------------------------------------------

nlohmann::json Comodule::to_json() const {
    return {{"hopf", hopf.to_json()},
            {"rank", rank},
            {"coaction", IntMatrix::from_dense(coaction).to_json()}};
}

Comodule Comodule::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw BadInput("comodule: expected a JSON object");
    for (const auto& [key, _] : j.items())
        if (key != "hopf" && key != "rank" && key != "coaction")
            throw BadInput("comodule: unknown field \"" + key + "\"");
    if (!j.contains("hopf") || !j.contains("rank") || !j.contains("coaction"))
        throw BadInput("comodule: fields hopf, rank, coaction are required");
    Comodule m;
    if (j["hopf"].is_string()) {
        auto h = builtin_hopf(j["hopf"].get<std::string>());
        if (!h) throw BadInput("comodule: unknown built-in hopf algebra \"" +
                               j["hopf"].get<std::string>() + "\"");
        m.hopf = *h;
    } else {
        m.hopf = HopfAlgebra::from_json(j["hopf"]);
    }
    if (!json_is_size(j["rank"])) throw BadInput("comodule: rank must be a nonnegative integer");
    m.rank = j["rank"].get<std::size_t>();
    m.coaction = IntMatrix::from_json(j["coaction"]).to_dense();
    if (m.coaction.rows != m.rank * m.hopf.rank || m.coaction.cols != m.rank)
        throw BadInput("comodule: coaction must be (rank*c) x rank");
    return m;
}

nlohmann::json RhoReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < matrix.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < matrix.cols; ++j) row.push_back(matrix(i, j).get_str());
        rows.push_back(row);
    }
    return {{"scalar", scalar.to_string()},
            {"injective", injective},
            {"surjective", surjective},
            {"cokernel", cokernel.to_json()},
            {"matrix", rows}};
}

nlohmann::json UcsReport::to_json() const {
    return {{"scalar", scalar.to_string()},
            {"tensored_invariants", tensored_invariants.to_json()},
            {"invariants_of_tensor", invariants_of_tensor.to_json()},
            {"tor1_h1", tor_term.to_json()},
            {"h1", h1.to_json()},
            {"rho", rho.to_json()},
            {"exact", exact}};
}

} // namespace hopfinv
