#include "levigon/plane.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace levigon {

std::string ValidationReport::to_string() const {
    if (ok()) return "all plane axioms hold";
    std::string out;
    for (const auto& i : issues) {
        out += i.axiom;
        out += ": ";
        out += i.witness;
        out += '\n';
    }
    return out;
}

ValidationReport validate_plane(const IncidenceData& d) {
    ValidationReport rep;
    auto fail = [&rep](std::string axiom, std::string witness) {
        rep.issues.push_back({std::move(axiom), std::move(witness)});
    };

    const int n = d.n;
    if (n < 2) {
        fail("order >= 2", "claimed order " + std::to_string(n));
        return rep;
    }
    const long long N = static_cast<long long>(n) * n + n + 1;
    if (static_cast<long long>(d.lines.size()) != N) {
        fail("line count = n^2+n+1",
             "got " + std::to_string(d.lines.size()) + " lines, expected " + std::to_string(N));
        return rep;
    }

    bool sizes_ok = true;
    for (size_t li = 0; li < d.lines.size(); ++li) {
        const auto& L = d.lines[li];
        if (static_cast<int>(L.size()) != n + 1) {
            fail("line size = n+1", "line " + std::to_string(li) + " has " + std::to_string(L.size()) + " points");
            sizes_ok = false;
            continue;
        }
        for (size_t i = 0; i < L.size(); ++i) {
            if (L[i] >= N) {
                fail("point index < N", "line " + std::to_string(li) + " references point " + std::to_string(L[i]));
                sizes_ok = false;
            }
            if (i + 1 < L.size() && L[i] >= L[i + 1]) {
                fail("line points strictly increasing", "line " + std::to_string(li));
                sizes_ok = false;
            }
        }
    }
    if (!sizes_ok) return rep;

    // every pair of points on exactly one line
    std::vector<uint16_t> pair(static_cast<size_t>(N) * N, kNoLine);
    std::vector<int> deg(N, 0);
    bool pairs_ok = true;
    for (size_t li = 0; li < d.lines.size(); ++li) {
        const auto& L = d.lines[li];
        for (auto pt : L) deg[pt]++;
        for (size_t i = 0; i < L.size() && pairs_ok; ++i)
            for (size_t j = i + 1; j < L.size(); ++j) {
                auto& slot = pair[static_cast<size_t>(L[i]) * N + L[j]];
                if (slot != kNoLine) {
                    fail("two points on exactly one line",
                         "points " + std::to_string(L[i]) + "," + std::to_string(L[j]) + " on lines " +
                             std::to_string(slot) + " and " + std::to_string(li));
                    pairs_ok = false;
                    break;
                }
                slot = static_cast<uint16_t>(li);
            }
        if (!pairs_ok) break;
    }
    if (pairs_ok) {
        for (long long a = 0; a < N && pairs_ok; ++a)
            for (long long b = a + 1; b < N; ++b)
                if (pair[static_cast<size_t>(a) * N + b] == kNoLine) {
                    fail("two points on exactly one line",
                         "points " + std::to_string(a) + "," + std::to_string(b) + " on no common line");
                    pairs_ok = false;
                    break;
                }
    }

    for (long long p = 0; p < N; ++p)
        if (deg[p] != n + 1) {
            fail("point degree = n+1",
                 "point " + std::to_string(p) + " lies on " + std::to_string(deg[p]) + " lines");
            break;
        }

    // two lines meet in exactly one point (given the pair axiom, counting
    // suffices: |l1 ^ l2| >= 2 would put a pair on two lines)
    if (pairs_ok) {
        for (size_t l1 = 0; l1 < d.lines.size(); ++l1) {
            for (size_t l2 = l1 + 1; l2 < d.lines.size(); ++l2) {
                int common = 0;
                size_t i = 0, j = 0;
                const auto& A = d.lines[l1];
                const auto& B = d.lines[l2];
                while (i < A.size() && j < B.size()) {
                    if (A[i] < B[j])
                        ++i;
                    else if (A[i] > B[j])
                        ++j;
                    else {
                        ++common;
                        ++i;
                        ++j;
                    }
                }
                if (common != 1) {
                    fail("two lines meet in exactly one point",
                         "lines " + std::to_string(l1) + "," + std::to_string(l2) + " share " +
                             std::to_string(common) + " points");
                    l1 = d.lines.size();
                    break;
                }
            }
        }
    }

    // non-degeneracy: four points, no three collinear
    if (pairs_ok && rep.ok()) {
        bool found = false;
        const auto& L0 = d.lines[0];
        const uint16_t P1 = L0[0], P2 = L0[1];
        for (long long p3 = 0; p3 < N && !found; ++p3) {
            if (pair[static_cast<size_t>(std::min<long long>(p3, P1)) * N + std::max<long long>(p3, P1)] ==
                pair[static_cast<size_t>(std::min<long long>(p3, P2)) * N + std::max<long long>(p3, P2)])
                continue;  // p3 on line P1P2 (or equal to one of them)
            for (long long p4 = 0; p4 < N && !found; ++p4) {
                if (p4 == P1 || p4 == P2 || p4 == p3) continue;
                auto on = [&](long long a, long long b, long long c) {
                    const auto lab = pair[static_cast<size_t>(std::min(a, b)) * N + std::max(a, b)];
                    const auto lac = pair[static_cast<size_t>(std::min(a, c)) * N + std::max(a, c)];
                    return lab == lac;
                };
                if (!on(P1, P2, p4) && !on(P1, p3, p4) && !on(P2, p3, p4)) found = true;
            }
        }
        if (!found) fail("quadrangle exists", "no four points with no three collinear");
    }

    return rep;
}

Plane Plane::from_data(IncidenceData d) {
    if (d.n > kMaxPlaneOrder)
        throw std::invalid_argument("plane order " + std::to_string(d.n) + " exceeds supported maximum " +
                                    std::to_string(kMaxPlaneOrder));
    ValidationReport rep = validate_plane(d);
    if (!rep.ok()) throw std::invalid_argument("not a projective plane:\n" + rep.to_string());

    Plane p;
    p.n = d.n;
    p.N = d.n * d.n + d.n + 1;
    p.lines = std::move(d.lines);
    p.point_lines.assign(p.N, {});
    p.pair_.assign(static_cast<size_t>(p.N) * p.N, kNoLine);
    for (size_t li = 0; li < p.lines.size(); ++li) {
        const auto& L = p.lines[li];
        for (auto pt : L) p.point_lines[pt].push_back(static_cast<uint16_t>(li));
        for (size_t i = 0; i < L.size(); ++i)
            for (size_t j = i + 1; j < L.size(); ++j) {
                p.pair_[static_cast<size_t>(L[i]) * p.N + L[j]] = static_cast<uint16_t>(li);
                p.pair_[static_cast<size_t>(L[j]) * p.N + L[i]] = static_cast<uint16_t>(li);
            }
    }
    return p;
}

uint16_t Plane::line_through(uint16_t a, uint16_t b) const {
    if (a == b) throw std::domain_error("line_through requires two distinct points");
    if (a >= N || b >= N) throw std::invalid_argument("point index out of range");
    return pair_[static_cast<size_t>(a) * N + b];
}

Plane build_pg2(const Field& f) {
    const uint32_t q = f.q();
    if (q > static_cast<uint32_t>(kMaxPlaneOrder))
        throw std::invalid_argument("plane order " + std::to_string(q) + " exceeds supported maximum " +
                                    std::to_string(kMaxPlaneOrder));
    const int N = static_cast<int>(q * q + q + 1);

    // normalized triples (rightmost nonzero coordinate == 1) in lex order
    std::vector<std::array<uint32_t, 3>> triples;
    triples.reserve(N);
    for (uint32_t x0 = 0; x0 < q; ++x0)
        for (uint32_t x1 = 0; x1 < q; ++x1)
            for (uint32_t x2 = 0; x2 < q; ++x2) {
                if (x0 == 0 && x1 == 0 && x2 == 0) continue;
                const uint32_t last = x2 != 0 ? x2 : (x1 != 0 ? x1 : x0);
                if (last == 1) triples.push_back({x0, x1, x2});
            }
    if (static_cast<int>(triples.size()) != N) throw std::logic_error("wrong projective point count");

    auto dot = [&f](const std::array<uint32_t, 3>& x, const std::array<uint32_t, 3>& a) {
        uint32_t s = 0;
        for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(x[i], a[i]));
        return s;
    };

    IncidenceData d;
    d.n = static_cast<int>(q);
    d.lines.resize(N);
    for (int li = 0; li < N; ++li) {
        auto& L = d.lines[li];
        for (int pi = 0; pi < N; ++pi)
            if (dot(triples[pi], triples[li]) == 0) L.push_back(static_cast<uint16_t>(pi));
    }
    return Plane::from_data(std::move(d));
}

Plane dual_plane(const Plane& p) {
    IncidenceData d;
    d.n = p.n;
    d.lines = p.point_lines;  // dual line for point P = pencil of lines through P
    return Plane::from_data(std::move(d));
}

IncidenceData parse_plane_text(std::istream& in) {
    IncidenceData d;
    std::string line;
    bool header = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header) {
            std::istringstream hs(line);
            std::string tag;
            hs >> tag;
            if (tag != "projective-plane")
                throw std::invalid_argument("parse error line " + std::to_string(lineno) +
                                            ": expected 'projective-plane order=<n>'");
            std::string kv;
            hs >> kv;
            if (kv.rfind("order=", 0) != 0)
                throw std::invalid_argument("parse error line " + std::to_string(lineno) + ": missing order=<n>");
            try {
                d.n = std::stoi(kv.substr(6));
            } catch (...) {
                throw std::invalid_argument("parse error line " + std::to_string(lineno) + ": bad order value");
            }
            header = true;
            continue;
        }
        std::istringstream ls(line);
        std::vector<uint16_t> pts;
        long long v;
        while (ls >> v) {
            if (v < 0 || v > 0xfffe)
                throw std::invalid_argument("parse error line " + std::to_string(lineno) + ": point index " +
                                            std::to_string(v) + " out of range");
            pts.push_back(static_cast<uint16_t>(v));
        }
        if (!ls.eof()) throw std::invalid_argument("parse error line " + std::to_string(lineno) + ": bad token");
        if (pts.empty()) continue;
        d.lines.push_back(std::move(pts));
    }
    if (!header) throw std::invalid_argument("parse error: missing 'projective-plane order=<n>' header");
    const long long N = static_cast<long long>(d.n) * d.n + d.n + 1;
    if (static_cast<long long>(d.lines.size()) != N)
        throw std::invalid_argument("parse error: expected " + std::to_string(N) + " lines, got " +
                                    std::to_string(d.lines.size()));
    return d;
}

std::string plane_text(const Plane& p) {
    std::string out = "projective-plane order=" + std::to_string(p.n) + "\n";
    for (const auto& L : p.lines) {
        for (size_t i = 0; i < L.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(L[i]);
        }
        out += '\n';
    }
    return out;
}

Plane load_plane(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open plane file: " + path);
    return Plane::from_data(parse_plane_text(in));
}

void save_plane(const Plane& p, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write plane file: " + path);
    out << plane_text(p);
}

}  // namespace levigon
