#pragma once

#include <vector>

#include "fcg/exact.hpp"

namespace fcg {

enum class Rel { Greater, GreaterEq, Eq };

/// Homogeneous constraint: coeffs · x  REL  0.
struct Constraint {
    std::vector<Int> coeffs;
    Rel rel = Rel::GreaterEq;
};

inline Constraint gt(std::vector<Int> c) { return {std::move(c), Rel::Greater}; }
inline Constraint ge(std::vector<Int> c) { return {std::move(c), Rel::GreaterEq}; }
inline Constraint eq(std::vector<Int> c) { return {std::move(c), Rel::Eq}; }

/// Exact Fourier-Motzkin elimination over the rationals. Equalities are
/// substituted away first; strict inequalities are honoured throughout.
/// Throws MalformedInput on inconsistent dimensions.
bool fm_feasible(const std::vector<Constraint>& system);

}  // namespace fcg
