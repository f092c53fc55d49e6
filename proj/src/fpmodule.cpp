#include "hopfinv/fpmodule.hpp"

#include <sstream>

#include "hopfinv/errors.hpp"

namespace hopfinv {

FpModule::FpModule(IntMatrix presentation) : presentation_(std::move(presentation)) {
    recompute();
}

void FpModule::recompute() {
    SmithForm snf = smith_normal_form(presentation_);
    free_rank_ = presentation_.rows() - snf.rank;
    torsion_.clear();
    for (const Int& d : snf.invariant_factors)
        if (d >= 2) torsion_.push_back(d);
}

FpModule FpModule::from_invariants(std::size_t free_rank, const std::vector<Int>& torsion) {
    DenseInt p(free_rank + torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) p(i, i) = torsion[i];
    return FpModule(IntMatrix::from_dense(p));
}

Int FpModule::torsion_order() const {
    Int n = 1;
    for (const Int& d : torsion_) n *= d;
    return n;
}

std::string FpModule::describe() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank_ > 0) {
        os << "Z";
        if (free_rank_ > 1) os << "^" << free_rank_;
        first = false;
    }
    for (const Int& d : torsion_) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

nlohmann::json FpModule::to_json() const {
    nlohmann::json tor = nlohmann::json::array();
    for (const Int& d : torsion_) tor.push_back(d.get_str());
    return {{"free_rank", free_rank_}, {"torsion", tor}, {"description", describe()}};
}

std::vector<Int> canonical_cyclic(const std::vector<Int>& orders) {
    DenseInt p(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) p(i, i) = orders[i];
    SmithForm snf = smith_normal_form(p);
    std::vector<Int> out;
    for (const Int& d : snf.invariant_factors)
        if (d >= 2) out.push_back(d);
    return out;
}

FpModule cokernel(const IntMatrix& a) { return FpModule(a); }

std::vector<Int> ScalarModule::abelian_invariants() const {
    std::vector<Int> orders = cyclic;
    if (scalar.has_modulus())
        for (std::size_t i = 0; i < free_rank; ++i) orders.push_back(scalar.modulus());
    return canonical_cyclic(orders);
}

bool ScalarModule::isomorphic(const ScalarModule& o) const {
    if (!(scalar == o.scalar)) return false;
    if (scalar.has_modulus()) return abelian_invariants() == o.abelian_invariants();
    return free_rank == o.free_rank && cyclic == o.cyclic;
}

std::string ScalarModule::describe() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    std::string base;
    switch (scalar.tag()) {
    case ScalarTag::Rat: base = "Q"; break;
    case ScalarTag::Fp: base = "F" + scalar.modulus().get_str(); break;
    case ScalarTag::IntMod: base = "Z/" + scalar.modulus().get_str(); break;
    case ScalarTag::Int: base = "Z"; break;
    }
    if (free_rank > 0) {
        os << base;
        if (free_rank > 1) os << "^" << free_rank;
        first = false;
    }
    for (const Int& d : cyclic) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

nlohmann::json ScalarModule::to_json() const {
    nlohmann::json cyc = nlohmann::json::array();
    for (const Int& d : cyclic) cyc.push_back(d.get_str());
    return {{"scalar", scalar.to_string()},
            {"free_rank", free_rank},
            {"cyclic", cyc},
            {"description", describe()}};
}

ScalarModule tensor_module(const FpModule& m, const BaseScalar& scalar) {
    ScalarModule out;
    out.scalar = scalar;
    switch (scalar.tag()) {
    case ScalarTag::Int:
        out.free_rank = m.free_rank();
        out.cyclic = m.torsion();
        break;
    case ScalarTag::Rat:
        out.free_rank = m.free_rank();
        break;
    case ScalarTag::Fp: {
        std::size_t dim = m.free_rank();
        for (const Int& d : m.torsion())
            if (d % scalar.modulus() == 0) ++dim;
        out.free_rank = dim;
        break;
    }
    case ScalarTag::IntMod: {
        const Int& n = scalar.modulus();
        out.free_rank = m.free_rank();
        std::vector<Int> orders;
        for (const Int& d : m.torsion()) {
            Int g = gcd(d, n);
            if (g >= 2 && g != n) orders.push_back(g);
            if (g == n) ++out.free_rank;
        }
        out.cyclic = canonical_cyclic(orders);
        break;
    }
    }
    return out;
}

ScalarModule tor1(const BaseScalar& scalar, const FpModule& m) {
    ScalarModule out;
    out.scalar = scalar;
    switch (scalar.tag()) {
    case ScalarTag::Int:
    case ScalarTag::Rat:
        break; // flat, Tor_1 = 0
    case ScalarTag::Fp: {
        std::size_t dim = 0;
        for (const Int& d : m.torsion())
            if (d % scalar.modulus() == 0) ++dim;
        out.free_rank = dim;
        break;
    }
    case ScalarTag::IntMod: {
        const Int& n = scalar.modulus();
        std::vector<Int> orders;
        for (const Int& d : m.torsion()) {
            Int g = gcd(d, n);
            if (g == n)
                ++out.free_rank;
            else if (g >= 2)
                orders.push_back(g);
        }
        out.cyclic = canonical_cyclic(orders);
        break;
    }
    }
    return out;
}

} // namespace hopfinv
