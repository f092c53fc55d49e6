#include "hopfinv/basechange.hpp"

#include <algorithm>
#include <set>

#include "hopfinv/exactlin.hpp"

namespace hopfinv {

std::vector<BaseScalar> TheoremInstance::default_algebras() {
    return {BaseScalar::rationals(), BaseScalar::prime_field(2), BaseScalar::prime_field(3),
            BaseScalar::prime_field(5), BaseScalar::mod(4), BaseScalar::mod(6)};
}

namespace {

/// iota : M -> M (x) C, e_k |-> e_k (x) 1.
DenseInt iota_matrix(const Comodule& m) {
    return kron(DenseInt::identity(m.rank), m.hopf.unit);
}

Int module_order(const ScalarModule& s) {
    Int order = 1;
    for (const Int& d : s.abelian_invariants()) order *= d;
    return order;
}

} // namespace

void TheoremInstance::validate() const {
    if (m.scalar().tag() != ScalarTag::Int) throw BadInput("theorem instance: comodule must be over Z");
    ValidationReport rep = validate_comodule(m);
    if (!rep.all_pass())
        throw BadInput("theorem instance: coaction fails axiom " + rep.failures[0].axiom);
    const std::size_t b = v_presentation.rows();
    if (phi.rows != m.rank || phi.cols != b)
        throw DimensionMismatch("theorem instance: phi must be rank(M) x generators(V)");
    DenseInt pd = v_presentation.to_dense();
    if (!(phi * pd).is_zero()) throw BadInput("theorem instance: phi does not kill the relations of V");
    if (!((m.coaction - iota_matrix(m)) * phi).is_zero())
        throw BadInput("theorem instance: phi does not land in the invariants");
    if (sample_algebras.empty()) throw BadInput("theorem instance: sample_algebras is empty");
    for (const BaseScalar& s : sample_algebras)
        if (s.tag() == ScalarTag::Int) throw BadInput("theorem instance: Z is not a sample algebra");
}

std::vector<Int> prime_factors(const Int& n) {
    Int v = abs(n);
    std::vector<Int> out;
    if (v <= 1) return out;
    Int d = 2;
    while (v > 1) {
        if (is_prime(v)) {
            out.push_back(v);
            break;
        }
        while (v % d != 0) d += (d == 2 ? 1 : 2);
        out.push_back(d);
        while (v % d == 0) v /= d;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Int> candidate_bad_primes(const TheoremInstance& inst) {
    CobarComplex c = cobar_complex(inst.m, 2);
    std::set<Int> primes;
    const std::vector<DenseInt> mats = {c.differentials[0], c.differentials[1], inst.phi,
                                        inst.v_presentation.to_dense()};
    for (const DenseInt& mat : mats) {
        SmithForm snf = smith_normal_form(mat);
        for (const Int& d : snf.invariant_factors)
            for (const Int& p : prime_factors(d)) primes.insert(p);
    }
    return {primes.begin(), primes.end()};
}

FieldVerdict check_hypothesis_over_field(const TheoremInstance& inst, const Int& p) {
    if (p != 0 && !is_prime(p)) throw BadInput("characteristic must be 0 or prime");
    const BaseScalar k = p == 0 ? BaseScalar::rationals() : BaseScalar::prime_field(p);
    const std::size_t b = inst.v_presentation.rows();
    const DenseInt pd = inst.v_presentation.to_dense();

    std::size_t rank_phi, rank_p;
    if (p == 0) {
        rank_phi = rank_rat(DenseRat::from_int(inst.phi));
        rank_p = rank_rat(DenseRat::from_int(pd));
    } else {
        rank_phi = rank_fp(inst.phi, p);
        rank_p = rank_fp(pd, p);
    }

    FieldVerdict v;
    v.p = p;
    v.dim_v = b - rank_p;
    v.dim_invariants = invariants(base_change_comodule(inst.m, k)).structure.free_rank;
    bool contained = ((inst.m.coaction - iota_matrix(inst.m)) * inst.phi).is_zero_over(k);
    // phi_K injective on coker(P) iff ker_K(phi) = im_K(P)
    v.injective = contained && (b - rank_phi == rank_p);
    v.surjective = contained && (rank_phi == v.dim_invariants);
    v.pass = v.injective && v.surjective;
    return v;
}

H1FlatReport check_h1_flat(const Comodule& m, const std::vector<Int>& primes) {
    H1FlatReport rep;
    rep.h1 = cohomology(cobar_complex(m, 2), 1);
    rep.flat = rep.h1.is_torsion_free();
    for (const Int& p : primes) {
        ScalarModule cert = tor1(BaseScalar::prime_field(p), rep.h1);
        if (rep.flat && !cert.is_zero())
            throw OracleDisagreement("H^1 torsion-free but Tor_1(F_" + p.get_str() +
                                     ", H^1) != 0");
        rep.tor_certificates.emplace_back(p, cert);
    }
    return rep;
}

TorsionFreeReport check_v_torsion_free(const FpModule& v) {
    TorsionFreeReport rep;
    rep.torsion_free = v.is_torsion_free();
    if (!rep.torsion_free) rep.witness_order = v.torsion().back();
    return rep;
}

ConclusionVerdict check_conclusion(const TheoremInstance& inst, const BaseScalar& s) {
    ConclusionVerdict out;
    out.scalar = s;
    if (s.is_field()) {
        FieldVerdict v = check_hypothesis_over_field(inst, s.tag() == ScalarTag::Rat ? Int(0) : s.modulus());
        out.pass = v.pass;
        out.detail = "dim S(x)V = " + std::to_string(v.dim_v) +
                     ", dim (S(x)M)^G = " + std::to_string(v.dim_invariants) +
                     (v.injective ? "" : ", not injective") +
                     (v.surjective ? "" : ", not surjective");
        return out;
    }
    if (s.tag() != ScalarTag::IntMod) throw BadInput("conclusion check: unsupported sample algebra");
    const Int n = s.modulus();
    const std::size_t b = inst.v_presentation.rows();
    // S (x) V = Z^b / (im P + n Z^b), a finite group
    DenseInt nib = DenseInt::identity(b);
    for (std::size_t i = 0; i < b; ++i) nib(i, i) = n;
    FpModule sv(IntMatrix::from_dense(inst.v_presentation.to_dense().hcat(nib)));
    Int order_v = sv.torsion_order();

    Invariants inv = invariants(base_change_comodule(inst.m, s));
    Int order_inv = module_order(inv.structure);
    FpModule coker = quotient_of_lattice_mod(inv.lift_lattice, inst.phi, n);

    out.pass = coker.is_zero() && order_v == order_inv;
    out.detail = "|S(x)V| = " + order_v.get_str() + ", |(S(x)M)^G| = " + order_inv.get_str() +
                 ", coker phi_S = " + coker.describe();
    return out;
}

PipelineReport run_pipeline(const TheoremInstance& inst) {
    inst.validate();
    PipelineReport rep;
    rep.bad_primes = candidate_bad_primes(inst);

    rep.hypothesis.push_back(check_hypothesis_over_field(inst, 0));
    for (const Int& p : rep.bad_primes)
        rep.hypothesis.push_back(check_hypothesis_over_field(inst, p));
    rep.hypothesis_all_pass = std::all_of(rep.hypothesis.begin(), rep.hypothesis.end(),
                                          [](const FieldVerdict& v) { return v.pass; });

    rep.h1_flat = check_h1_flat(inst.m, rep.bad_primes);
    rep.v_torsion_free = check_v_torsion_free(FpModule(inst.v_presentation));

    std::vector<BaseScalar> algebras = inst.sample_algebras;
    std::sort(algebras.begin(), algebras.end(),
              [](const BaseScalar& a, const BaseScalar& b) { return a.to_string() < b.to_string(); });
    algebras.erase(std::unique(algebras.begin(), algebras.end(),
                               [](const BaseScalar& a, const BaseScalar& b) {
                                   return a.to_string() == b.to_string();
                               }),
                   algebras.end());
    for (const BaseScalar& s : algebras) rep.conclusions.push_back(check_conclusion(inst, s));
    rep.all_conclusions_pass = std::all_of(rep.conclusions.begin(), rep.conclusions.end(),
                                           [](const ConclusionVerdict& v) { return v.pass; });

    if (rep.hypothesis_all_pass && !rep.all_conclusions_pass) {
        std::string bad;
        for (const ConclusionVerdict& v : rep.conclusions)
            if (!v.pass) bad += " " + v.scalar.to_string();
        throw TheoremViolation("hypothesis verified at every characteristic but phi_S fails over" +
                               bad);
    }
    return rep;
}

// --- JSON ------------------------------------------------------------------

nlohmann::json FieldVerdict::to_json() const {
    return {{"characteristic", p.get_str()}, {"pass", pass},
            {"dim_v", dim_v},               {"dim_invariants", dim_invariants},
            {"injective", injective},       {"surjective", surjective}};
}

nlohmann::json H1FlatReport::to_json() const {
    nlohmann::json certs = nlohmann::json::array();
    for (const auto& [p, cert] : tor_certificates)
        certs.push_back({{"prime", p.get_str()}, {"tor1", cert.to_json()}});
    return {{"flat", flat}, {"h1", h1.to_json()}, {"tor_certificates", certs}};
}

nlohmann::json TorsionFreeReport::to_json() const {
    nlohmann::json j = {{"torsion_free", torsion_free}};
    if (!torsion_free) j["witness_order"] = witness_order.get_str();
    return j;
}

nlohmann::json ConclusionVerdict::to_json() const {
    return {{"algebra", scalar.to_string()}, {"pass", pass}, {"detail", detail}};
}

nlohmann::json PipelineReport::to_json() const {
    nlohmann::json primes = nlohmann::json::array();
    for (const Int& p : bad_primes) primes.push_back(p.get_str());
    nlohmann::json hyp = nlohmann::json::array();
    for (const FieldVerdict& v : hypothesis) hyp.push_back(v.to_json());
    nlohmann::json conc = nlohmann::json::array();
    for (const ConclusionVerdict& v : conclusions) conc.push_back(v.to_json());
    return {{"bad_primes", primes},
            {"hypothesis", hyp},
            {"hypothesis_all_pass", hypothesis_all_pass},
            {"h1_flat", h1_flat.to_json()},
            {"v_torsion_free", v_torsion_free.to_json()},
            {"conclusions", conc},
            {"all_conclusions_pass", all_conclusions_pass}};
}

nlohmann::json TheoremInstance::to_json() const {
    nlohmann::json algebras = nlohmann::json::array();
    for (const BaseScalar& s : sample_algebras) algebras.push_back(s.to_string());
    return {{"comodule", m.to_json()},
            {"v_presentation", v_presentation.to_json()},
            {"phi", IntMatrix::from_dense(phi).to_json()},
            {"algebras", algebras}};
}

TheoremInstance TheoremInstance::from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw BadInput("theorem instance: expected a JSON object");
    static const std::vector<std::string> known = {"comodule", "v_presentation", "phi", "algebras"};
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw BadInput("theorem instance: unknown field \"" + key + "\"");
    for (const std::string& k : known)
        if (!j.contains(k)) throw BadInput("theorem instance: missing field \"" + k + "\"");
    TheoremInstance inst;
    inst.m = Comodule::from_json(j["comodule"]);
    inst.v_presentation = IntMatrix::from_json(j["v_presentation"]);
    inst.phi = IntMatrix::from_json(j["phi"]).to_dense();
    if (!j["algebras"].is_array()) throw BadInput("theorem instance: algebras must be an array");
    for (const auto& a : j["algebras"]) {
        if (!a.is_string()) throw BadInput("theorem instance: algebras must be strings");
        inst.sample_algebras.push_back(BaseScalar::parse(a.get<std::string>()));
    }
    return inst;
}

} // namespace hopfinv
