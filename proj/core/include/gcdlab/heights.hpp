#pragma once

#include "gcdlab/logreal.hpp"
#include "gcdlab/places.hpp"

#include <map>
#include <vector>

namespace gcdlab {

class MultiPoly;

/// A point of projective space, stored in the canonical representative:
/// coprime integer coordinates with the first nonzero coordinate positive.
class ProjPoint {
public:
    /// Throws DomainError for an empty or all-zero coordinate list.
    explicit ProjPoint(const std::vector<Rational>& coords);

    const std::vector<Integer>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    std::vector<Rational> rational_coords() const;

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
    std::vector<Integer> coords_;
};

/// A point of the torus G_m^n(Q): every coordinate nonzero.
class TorusPoint {
public:
    explicit TorusPoint(std::vector<Rational> coords);

    const std::vector<Rational>& coords() const { return coords_; }
    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    /// Coordinate-wise inverse.
    TorusPoint inverse() const;

private:
    std::vector<Rational> coords_;
};

/// (S, delta) with S containing the archimedean place and 0 <= delta < 1.
class AlmostUnitConfig {
public:
    AlmostUnitConfig(PlaceSet s, Rational delta);
    const PlaceSet& S() const { return s_; }
    const Rational& delta() const { return delta_; }

private:
    PlaceSet s_;
    Rational delta_;
};

/// lambda_v(x) = log max(1, |x|_v); lambda_v(0) = 0.
LogReal local_height(const Rational& x, const Place& v);

/// h(x) = sum over places of lambda_v(x), computed as log max(|num|, |den|).
LogReal height(const Rational& x);

/// h(P) = sum_v log max_i |alpha_i|_v; on the canonical representative this
/// is log max |coordinate|.
LogReal proj_height(const ProjPoint& P);

/// log max_i |alpha_i|_v over the nonzero coordinates.
LogReal log_max_abs(const std::vector<Rational>& coords, const Place& v);

struct TupleHeights {
    LogReal height;                       ///< h(u) = sum_v log max(1, |u_1|_v, ..., |u_n|_v)
    std::map<Place, LogReal> local;       ///< lambda_v(u) on the support (nonzero entries only)
    LogReal standard_height;              ///< sum_i h(u_i)
};

/// Tuple heights of u in the projective convention, plus the standard height.
TupleHeights tuple_heights(const TorusPoint& u);

/// lambda_v(u) = log max(1, |u_1|_v, ..., |u_n|_v).
LogReal tuple_local_height(const TorusPoint& u, const Place& v);

/// h_Sbar(x) = sum_{v not in S} lambda_v(x) + lambda_v(1/x); x != 0.
LogReal h_sbar(const Rational& x, const PlaceSet& S);

/// Tuple version with the projective convention: lambda_v of the tuple and of
/// its coordinate-wise inverse.
LogReal h_sbar(const TorusPoint& u, const PlaceSet& S);

/// Standard-height version: sum_i h_Sbar(u_i).
LogReal h_sbar_standard(const TorusPoint& u, const PlaceSet& S);

/// h_Sbar(x) <= delta * h(x), decided exactly.
bool is_almost_unit(const Rational& x, const AlmostUnitConfig& cfg);
bool is_almost_unit(const TorusPoint& u, const AlmostUnitConfig& cfg);
/// Same predicate measured with the standard height on both sides.
bool is_almost_unit_standard(const TorusPoint& u, const AlmostUnitConfig& cfg);

/// Quasi-S-integer predicate sum_{v in S} lambda_v(x) >= eps * h(x). The
/// positive part of log|x|_v is read as lambda_v(x).
bool is_quasi_s_integer(const Rational& x, const PlaceSet& S, const Rational& eps);

/// lambda_{D,v}(P) = log(|P|_v^d / |F(P)|_v) for the hypersurface F = 0 of
/// degree d. F must be homogeneous with one variable per coordinate of P.
LogReal hypersurface_local_height(const MultiPoly& F, const ProjPoint& P, const Place& v);
LogReal hypersurface_local_height(const MultiPoly& F, const std::vector<Rational>& coords, const Place& v);

}  // namespace gcdlab
