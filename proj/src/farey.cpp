#include "lensbound/farey.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace lensbound {

namespace {

__int128 cross(const Slope& s, const Slope& t) {
    return static_cast<__int128>(s.num) * t.den - static_cast<__int128>(s.den) * t.num;
}

void validate_path(const FareyPath& path) {
    if (path.vertices.size() < 2) throw std::logic_error("farey path needs >= 2 vertices");
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        const Slope& u = path.vertices[i];
        const Slope& v = path.vertices[i + 1];
        if (!is_farey_edge(u, v))
            throw std::logic_error("farey path broken at " + u.str() + " -> " + v.str());
        if (!slope_value_less(u, v))
            throw std::logic_error("farey path not monotone at " + u.str() + " -> " + v.str());
    }
}

// Unreduced base point of a Stern-Brocot neighbor fan of r; the k-th fan
// member is (n + k*r.num) / (d + k*r.den).
struct FanSeed {
    long long n;
    long long d;
};

// The two parent fans of r.  Every Farey neighbor of r is u + k*r or
// v + k*r (componentwise) for the seeds u, v returned here.
std::array<FanSeed, 2> fan_seeds(const Slope& r) {
    if (r.is_infinite()) return {{{0, 1}, {0, -1}}};
    if (r.den == 1) return {{{1, 0}, {-1, 0}}};
    long long inv = mod_inverse(r.num, r.den);  // num*inv = 1 (mod den), 0 < inv < den
    long long delta_left = inv;
    long long gamma_left = (r.num * delta_left - 1) / r.den;
    long long delta_right = r.den - inv;
    long long gamma_right = (r.num * delta_right + 1) / r.den;
    return {{{gamma_left, delta_left}, {gamma_right, delta_right}}};
}

}  // namespace

bool is_farey_edge(const Slope& s, const Slope& t) {
    if (s == t) throw std::invalid_argument("is_farey_edge requires distinct slopes");
    __int128 det = cross(s, t);
    return det == 1 || det == -1;
}

bool ccw_in_open_arc(const Slope& x, const Slope& a, const Slope& b) {
    if (a == b) throw std::invalid_argument("ccw_in_open_arc requires distinct arc endpoints");
    if (x == a || x == b) return false;
    if (a.is_infinite()) return !x.is_infinite() && slope_value_less(x, b);
    if (b.is_infinite()) return !x.is_infinite() && slope_value_less(a, x);
    if (slope_value_less(a, b)) {
        return !x.is_infinite() && slope_value_less(a, x) && slope_value_less(x, b);
    }
    // Arc wraps through infinity.
    return x.is_infinite() || slope_value_less(a, x) || slope_value_less(x, b);
}

bool ccw_in_closed_arc(const Slope& x, const Slope& a, const Slope& b) {
    if (x == a || x == b) return true;
    if (a == b) return false;
    return ccw_in_open_arc(x, a, b);
}

Slope ccw_successor_toward_zero(const Slope& c) {
    if (c.is_infinite() || !slope_value_less(c, Slope::zero()))
        throw std::invalid_argument("successor requires a finite negative slope");
    if (c.den == 1) return Slope(c.num + 1, 1);
    // Counterclockwise parent: the unique neighbor gamma/delta with
    // 0 < delta < den and c < gamma/delta.  The clockwise parent lies
    // outside (c, 0] and every other neighbor has a larger denominator,
    // so no denominator tie is possible.
    long long inv = mod_inverse(c.num, c.den);
    long long delta = c.den - inv;
    long long gamma = (c.num * delta + 1) / c.den;
    return Slope(gamma, delta);
}

FareyPath minimal_path(const LensSpace& lens) {
    if (lens.p < 2) throw std::invalid_argument("minimal_path requires p >= 2");
    FareyPath path;
    Slope c(-lens.p, lens.q);
    path.vertices.push_back(c);
    while (!(c == Slope::zero())) {
        Slope s = ccw_successor_toward_zero(c);
        if (c.den >= 2 && s.den >= c.den)
            throw std::logic_error("minimal_path: denominator did not drop at " + c.str());
        path.vertices.push_back(s);
        c = s;
    }
    validate_path(path);
    return path;
}

FareyPath bfs_minimal_path(const LensSpace& lens) {
    if (lens.p < 2) throw std::invalid_argument("bfs_minimal_path requires p >= 2");
    const long long P = lens.p;
    const long long Q = lens.q;

    // Vertex set: reduced c/d in [-P/Q, 0] with d <= Q, sorted ccw.
    std::vector<Slope> verts;
    for (long long d = 1; d <= Q; ++d) {
        long long c_min = -((P * d) / Q);
        for (long long c = c_min; c <= 0; ++c) {
            if (std::gcd(c < 0 ? -c : c, d) != 1) continue;
            verts.emplace_back(c, d);
        }
    }
    std::sort(verts.begin(), verts.end(), slope_value_less);

    auto index_of = [&](const Slope& s) -> std::ptrdiff_t {
        auto it = std::lower_bound(verts.begin(), verts.end(), s, slope_value_less);
        if (it == verts.end() || !(*it == s)) return -1;
        return it - verts.begin();
    };

    const std::ptrdiff_t src = index_of(Slope(-P, Q));
    const std::ptrdiff_t dst = index_of(Slope::zero());
    if (src < 0 || dst < 0) throw std::logic_error("bfs_minimal_path: endpoints missing");

    std::vector<int> dist(verts.size(), -1);
    std::vector<std::ptrdiff_t> parent(verts.size(), -1);
    std::deque<std::ptrdiff_t> queue;
    dist[src] = 0;
    queue.push_back(src);

    std::vector<std::ptrdiff_t> nbrs;
    while (!queue.empty()) {
        std::ptrdiff_t cur = queue.front();
        queue.pop_front();
        const Slope v = verts[cur];
        const long long a = v.num;
        const long long b = v.den;

        // Counterclockwise neighbors: solutions of a*d - b*c = +/-1 with
        // d <= Q and c/d in the arc, strictly above v.
        nbrs.clear();
        auto consider = [&](long long cc, long long dd) {
            if (cc > 0) return;
            if (static_cast<__int128>(cc) * Q < static_cast<__int128>(-P) * dd) return;
            if (static_cast<__int128>(cc) * b <= static_cast<__int128>(a) * dd) return;
            std::ptrdiff_t idx = index_of(Slope(cc, dd));
            if (idx >= 0) nbrs.push_back(idx);
        };
        if (b == 1) {
            for (long long d = 1; d <= Q; ++d) {
                consider(a * d - 1, d);
                consider(a * d + 1, d);
            }
        } else {
            long long inv = mod_inverse(a, b);
            for (long long d = inv; d <= Q; d += b) consider((a * d - 1) / b, d);
            for (long long d = b - inv; d <= Q; d += b) consider((a * d + 1) / b, d);
        }
        std::sort(nbrs.begin(), nbrs.end());

        for (std::ptrdiff_t nxt : nbrs) {
            if (dist[nxt] >= 0) continue;
            dist[nxt] = dist[cur] + 1;
            parent[nxt] = cur;
            queue.push_back(nxt);
        }
    }

    if (dist[dst] < 0) throw std::logic_error("bfs_minimal_path: 0 unreachable");
    FareyPath path;
    for (std::ptrdiff_t at = dst; at >= 0; at = parent[at]) path.vertices.push_back(verts[at]);
    std::reverse(path.vertices.begin(), path.vertices.end());
    validate_path(path);
    return path;
}

std::vector<Slope> neighbors_in_arc(const Slope& r, const Slope& a, const Slope& b) {
    if (a == b) throw std::invalid_argument("neighbors_in_arc requires distinct arc endpoints");
    if (ccw_in_closed_arc(r, a, b))
        throw std::invalid_argument("infinite neighbor set: " + r.str() +
                                    " lies in the closed arc [" + a.str() + ", " + b.str() + "]");

    std::vector<Slope> out;
    for (const FanSeed& seed : fan_seeds(r)) {
        Slope f0(seed.n, seed.d);
        Slope f1(seed.n + r.num, seed.d + r.den);
        // The fan sweeps monotonically from the seed toward r; determine
        // on which side, then walk until it has passed the whole arc.
        const bool ccw_moving = ccw_in_open_arc(f1, f0, r);
        for (long long k = 0;; ++k) {
            Slope f(seed.n + k * r.num, seed.d + k * r.den);
            bool inside = ccw_in_open_arc(f, a, b);
            if (inside) out.push_back(f);
            bool reachable =
                inside || (ccw_moving ? (f == a || ccw_in_open_arc(a, f, r))
                                      : (f == b || ccw_in_open_arc(b, r, f)));
            if (!reachable) break;
        }
    }

    auto ccw_from_a = [&](const Slope& x, const Slope& y) {
        if (x == y) return false;
        return ccw_in_open_arc(x, a, y);
    };
    std::sort(out.begin(), out.end(), ccw_from_a);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace lensbound
