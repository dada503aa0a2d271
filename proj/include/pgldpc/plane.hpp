#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "pgldpc/binary_matrix.hpp"
#include "pgldpc/field.hpp"

namespace pgldpc {

/// Homogeneous coordinates of a projective point (or line form), normalized
/// so the first nonzero coordinate is 1.
using HomTriple = std::array<std::uint32_t, 3>;

/// Points and lines of PG(2,q) with their incidence structure.
struct Plane {
    int q = 0;
    int n = 0;  // q^2 + q + 1
    std::vector<HomTriple> points;          // index -> normalized triple
    std::map<HomTriple, int> point_labels;  // normalized triple -> index
    std::vector<std::vector<int>> line_supports;
};

/// All q^2+q+1 normalized points, lines as kernels of normalized linear
/// forms; initial labeling is lexicographic in the coordinates.
Plane build_plane(const FieldTable& field);

struct CirculantLabeling {
    Plane plane;                      // same geometry, points relabeled along the Singer cycle
    BinaryMatrix H;                   // circulant line-point incidence matrix
    std::vector<int> difference_set;  // support of row 0 (a perfect difference set mod n)
};

/// Relabels the plane along a Singer cycle so that the incidence matrix is
/// circulant: point indices follow powers of a primitive element of GF(q^3),
/// so multiplication by it shifts every line support by one.
///
/// Throws std::logic_error if no circulant labeling results (implementation
/// bug by construction), std::invalid_argument if 3*s exceeds the supported
/// field-table range.
CirculantLabeling circulant_labeling(const FieldTable& field, const Plane& plane);

}  // namespace pgldpc
