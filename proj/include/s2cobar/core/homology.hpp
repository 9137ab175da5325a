#pragma once

#include "s2cobar/core/chain_complex.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace s2cobar {

struct HomologyGroup {
    int degree = 0;
    std::size_t betti = 0;
    std::vector<Integer> torsion;                    // invariant factors > 1
    std::vector<std::vector<Scalar>> free_reps;      // cycles, one per free summand
    std::vector<std::vector<Scalar>> torsion_reps;   // cycles, one per torsion factor

    bool is_zero() const { return betti == 0 && torsion.empty(); }
    std::string describe() const
    {
        std::ostringstream out;
        if (is_zero())
            return "0";
        bool first = true;
        if (betti) {
            out << "Z^" << betti;
            first = false;
        }
        for (const auto& t : torsion) {
            out << (first ? "" : " + ") << "Z/" << t;
            first = false;
        }
        return out.str();
    }
};

struct HomologyReport {
    std::map<int, HomologyGroup> groups;

    bool acyclic() const
    {
        for (const auto& [k, g] : groups)
            if (!g.is_zero())
                return false;
        return true;
    }
};

namespace detail {

inline std::vector<Scalar> column(const Matrix& m, std::size_t j)
{
    std::vector<Scalar> v(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        v[i] = m(i, j);
    return v;
}

inline HomologyGroup homology_integers(int k, const Matrix& A, const Matrix& B, std::size_t n, bool with_reps)
{
    HomologyGroup g;
    g.degree = k;
    SmithForm sa = smith_normal_form(A);
    const std::size_t ra = sa.rank;
    // Kernel of A: the last n - ra columns of V.  Express im B in that basis.
    Matrix coords = sa.right_inverse * B;
    Matrix X(n - ra, B.cols());
    for (std::size_t i = ra; i < n; ++i)
        for (std::size_t j = 0; j < B.cols(); ++j)
            X(i - ra, j) = coords(i, j);
    SmithForm sx = smith_normal_form(X);
    g.betti = (n - ra) - sx.rank;
    Matrix K(n, n - ra);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = ra; j < n; ++j)
            K(i, j - ra) = sa.right(i, j);
    Matrix gens = K * sx.left_inverse;
    for (std::size_t i = 0; i < n - ra; ++i) {
        if (i < sx.rank) {
            Integer f = numerator(sx.diagonal(i, i));
            if (f > 1) {
                g.torsion.push_back(f);
                if (with_reps)
                    g.torsion_reps.push_back(column(gens, i));
            }
        }
        else if (with_reps)
            g.free_reps.push_back(column(gens, i));
    }
    return g;
}

inline HomologyGroup homology_field(int k, const Matrix& A, const Matrix& B, std::size_t n, const Ring& ring,
                                    bool with_reps)
{
    HomologyGroup g;
    g.degree = k;
    std::size_t ra = rank(A, ring), rb = rank(B, ring);
    g.betti = n - ra - rb;
    if (with_reps && g.betti > 0) {
        SubmoduleReducer span(ring, n);
        for (std::size_t j = 0; j < B.cols(); ++j)
            span.insert(column(B, j));
        for (auto& z : null_space(A, ring))
            if (span.insert(z))
                g.free_reps.push_back(z);
    }
    return g;
}

}  // namespace detail

/// Homology of X in degrees [a, b]; needs the blocks d_k for k in [a, b + 1].
inline HomologyReport homology(const ChainComplex& X, int a, int b, bool with_reps = false)
{
    const Ring& ring = X.ring;
    if (ring.kind() == Ring::Kind::IntegersMod && !ring.is_field())
        throw RingError("homology over " + ring.name() + " is not supported");
    HomologyReport report;
    for (int k = a; k <= b; ++k) {
        auto A = X.block(k);
        auto B = X.block(k + 1);
        if (!A || !B)
            throw WindowTooNarrow("homology in degree " + std::to_string(k) + " needs differentials out of degrees " +
                                  std::to_string(k) + " and " + std::to_string(k + 1));
        const std::size_t n = X.dim(k);
        report.groups[k] = ring.kind() == Ring::Kind::Integers
                               ? detail::homology_integers(k, *A, *B, n, with_reps)
                               : detail::homology_field(k, A->reduced(ring), B->reduced(ring), n, ring, with_reps);
    }
    return report;
}

/// Whether f induces an isomorphism on homology in degrees [a, b], decided by
/// acyclicity of the mapping cone in degrees [a, b + 1].
inline bool is_quasi_isomorphism(const ChainComplex& X, const ChainComplex& Y, const ChainMap& f, int a, int b)
{
    ChainComplex cone = mapping_cone(X, Y, f);
    return homology(cone, a, b + 1).acyclic();
}

}  // namespace s2cobar
