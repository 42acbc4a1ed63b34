#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "levigon/gf.hpp"

namespace levigon {

/// Largest plane order accepted by construction/ingestion. The pair->line
/// lookup is a dense N x N matrix, and exact counting is infeasible far
/// below this anyway.
constexpr int kMaxPlaneOrder = 64;
constexpr uint16_t kNoLine = 0xffff;

/// Raw incidence structure claiming to be a projective plane of order n.
struct IncidenceData {
    int n = 0;
    std::vector<std::vector<uint16_t>> lines;
};

struct ValidationIssue {
    std::string axiom;
    std::string witness;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
    std::string to_string() const;
};

/// Checks every plane axiom exhaustively; violations become report entries
/// with a witness, never exceptions.
ValidationReport validate_plane(const IncidenceData& d);

/// Validated projective plane of order n. Immutable after construction;
/// safe for unrestricted concurrent reads.
class Plane {
public:
    int n = 0;
    int N = 0;                                       // n^2 + n + 1
    std::vector<std::vector<uint16_t>> lines;        // per line: sorted point ids
    std::vector<std::vector<uint16_t>> point_lines;  // per point: sorted line ids

    /// The unique line through two distinct points; O(1).
    uint16_t line_through(uint16_t a, uint16_t b) const;

    /// Row of the pair->line matrix for point a (diagonal holds kNoLine).
    const uint16_t* pair_row(uint16_t a) const { return pair_.data() + static_cast<size_t>(a) * N; }

    /// Validates and builds the derived incidence maps; throws
    /// std::invalid_argument carrying the validation report on failure.
    static Plane from_data(IncidenceData d);

private:
    Plane() = default;
    std::vector<uint16_t> pair_;
};

/// Desarguesian plane PG(2,q): points and lines are normalized homogeneous
/// triples over GF(q) (rightmost nonzero coordinate 1) enumerated in
/// lexicographic order; incidence is a zero dot product.
Plane build_pg2(const Field& f);

Plane dual_plane(const Plane& p);

/// Plane file format: header `projective-plane order=<n>`, then exactly N
/// lines of n+1 strictly increasing point indices. `#` starts a comment.
IncidenceData parse_plane_text(std::istream& in);
std::string plane_text(const Plane& p);
Plane load_plane(const std::string& path);
void save_plane(const Plane& p, const std::string& path);

}  // namespace levigon
