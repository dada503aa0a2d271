#include "pgldpc/plane.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pgldpc {

namespace {

HomTriple normalize(const FieldTable& f, HomTriple t) {
    for (auto c : t) {
        if (c != 0) {
            auto ci = f.inv(c);
            return {f.mul(ci, t[0]), f.mul(ci, t[1]), f.mul(ci, t[2])};
        }
    }
    throw std::invalid_argument("cannot normalize the zero triple");
}

std::uint32_t dot3(const FieldTable& f, const HomTriple& a, const HomTriple& b) {
    return f.mul(a[0], b[0]) ^ f.mul(a[1], b[1]) ^ f.mul(a[2], b[2]);
}

}  // namespace

Plane build_plane(const FieldTable& field) {
    const std::uint32_t q = field.order();
    Plane p;
    p.q = static_cast<int>(q);
    p.n = static_cast<int>(q * q + q + 1);

    // Normalized points in lexicographic coordinate order.
    for (std::uint32_t x0 = 0; x0 < q; ++x0)
        for (std::uint32_t x1 = 0; x1 < q; ++x1)
            for (std::uint32_t x2 = 0; x2 < q; ++x2) {
                if (x0 == 0 && x1 == 0 && x2 == 0) continue;
                HomTriple t = normalize(field, {x0, x1, x2});
                if (!p.point_labels.contains(t)) {
                    p.point_labels.emplace(t, static_cast<int>(p.points.size()));
                    p.points.push_back(t);
                }
            }
    if (static_cast<int>(p.points.size()) != p.n) throw std::logic_error("point count mismatch in PG(2,q)");

    // Lines: kernels of normalized nonzero linear forms, enumerated in the
    // same lexicographic order as the points.
    p.line_supports.reserve(static_cast<std::size_t>(p.n));
    for (const auto& form : p.points) {
        std::vector<int> supp;
        supp.reserve(q + 1);
        for (int i = 0; i < p.n; ++i) {
            if (dot3(field, form, p.points[static_cast<std::size_t>(i)]) == 0) supp.push_back(i);
        }
        if (static_cast<std::uint32_t>(supp.size()) != q + 1)
            throw std::logic_error("line does not contain q+1 points");
        p.line_supports.push_back(std::move(supp));
    }
    return p;
}

CirculantLabeling circulant_labeling(const FieldTable& field, const Plane& plane) {
    const int s = field.degree();
    const std::uint32_t q = field.order();
    const int n = plane.n;
    if (3 * s > 16)
        throw std::invalid_argument("circulant labeling needs GF(2^(3s)); 3s exceeds the supported range");

    FieldTable cubic = FieldTable::build(3 * s);  // GF(q^3)

    // The subfield GF(q) inside GF(q^3): its nonzero elements are the powers
    // alpha^(j*n). Locate a root of the ground field's primitive polynomial
    // there, taking the smallest discrete log for determinism.
    std::uint32_t beta = 0;
    for (std::uint32_t j = 0; j < q - 1; ++j) {
        std::uint32_t cand = cubic.exp_at(static_cast<long>(j) * n);
        std::uint32_t acc = 0;
        for (int bit = 0; bit <= s; ++bit) {
            if ((field.primitive_poly() >> bit) & 1) acc ^= cubic.pow(cand, bit);
        }
        if (acc == 0) {
            beta = cand;
            break;
        }
    }
    if (beta == 0) throw std::logic_error("no embedding of GF(q) into GF(q^3) found");

    // Embedding phi: GF(q) -> GF(q^3), g^k -> beta^k.
    std::vector<std::uint32_t> phi(q, 0);
    phi[1] = 1;
    for (std::uint32_t k = 0; k < q - 1; ++k) phi[field.exp_at(k)] = cubic.pow(beta, k);

    // New label of a point: the discrete log (mod n) of its image under the
    // GF(q)-basis {1, alpha, alpha^2} of GF(q^3). Multiplication by alpha then
    // advances every label by one, which is exactly the Singer cycle.
    const std::uint32_t alpha = cubic.generator();
    const std::uint32_t alpha2 = cubic.mul(alpha, alpha);
    std::vector<int> new_label(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const auto& t = plane.points[static_cast<std::size_t>(i)];
        std::uint32_t z = phi[t[0]] ^ cubic.mul(phi[t[1]], alpha) ^ cubic.mul(phi[t[2]], alpha2);
        if (z == 0) throw std::logic_error("basis {1,alpha,alpha^2} is degenerate over GF(q)");
        new_label[static_cast<std::size_t>(i)] = static_cast<int>(cubic.log_at(z) % n);
    }
    {
        std::set<int> distinct(new_label.begin(), new_label.end());
        if (static_cast<int>(distinct.size()) != n)
            throw std::logic_error("Singer relabeling is not a bijection");
    }

    // Relabeled lines; the base row is the lexicographically smallest support.
    std::vector<std::vector<int>> relabeled;
    relabeled.reserve(static_cast<std::size_t>(n));
    for (const auto& supp : plane.line_supports) {
        std::vector<int> ns;
        ns.reserve(supp.size());
        for (int i : supp) ns.push_back(new_label[static_cast<std::size_t>(i)]);
        std::sort(ns.begin(), ns.end());
        relabeled.push_back(std::move(ns));
    }
    std::vector<int> base = *std::min_element(relabeled.begin(), relabeled.end());

    // Row j of H = base + j (mod n); every line must be hit exactly once.
    std::set<std::vector<int>> remaining(relabeled.begin(), relabeled.end());
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<int> shifted;
        shifted.reserve(base.size());
        for (int x : base) shifted.push_back((x + j) % n);
        std::sort(shifted.begin(), shifted.end());
        if (remaining.erase(shifted) != 1)
            throw std::logic_error("relabeled lines are not the cyclic shifts of one difference set");
        rows.push_back(std::move(shifted));
    }

    CirculantLabeling out;
    out.H = BinaryMatrix::from_rows(n, rows);
    out.difference_set = base;

    out.plane.q = plane.q;
    out.plane.n = n;
    out.plane.points.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const auto& t = plane.points[static_cast<std::size_t>(i)];
        out.plane.points[static_cast<std::size_t>(new_label[static_cast<std::size_t>(i)])] = t;
        out.plane.point_labels.emplace(t, new_label[static_cast<std::size_t>(i)]);
    }
    out.plane.line_supports = rows;
    return out;
}

}  // namespace pgldpc
