#include "lensbound/homology.hpp"

#include <algorithm>
#include <istream>
#include <stdexcept>
#include <string>

namespace lensbound {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.n);
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t k = 0; k < a.n; ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < a.n; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

bool is_tridiagonal(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j)
            if ((i > j ? i - j : j - i) > 1 && m.at(i, j) != 0) return false;
    return true;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

std::vector<Int> SnfResult::diagonal() const {
    std::vector<Int> out;
    out.reserve(d.n);
    for (std::size_t i = 0; i < d.n; ++i) out.push_back(d.at(i, i));
    return out;
}

std::string AbelianGroup::str() const {
    if (is_trivial()) return "trivial";
    std::string out;
    if (free_rank == 1) out = "Z";
    else if (free_rank > 1) out = "Z^" + std::to_string(free_rank);
    for (const Int& d : invariant_factors) {
        if (!out.empty()) out += " + ";
        out += "Z/" + d.str();
    }
    return out;
}

SnfResult smith_normal_form(const IntMatrix& m) {
    const std::size_t n = m.n;
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(n);
    IntMatrix v = IntMatrix::identity(n);

    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t j = 0; j < n; ++j) {
            a.at(dst, j) += f * a.at(src, j);
            u.at(dst, j) += f * u.at(src, j);
        }
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        for (std::size_t i = 0; i < n; ++i) {
            a.at(i, dst) += f * a.at(i, src);
            v.at(i, dst) += f * v.at(i, src);
        }
    };
    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t j = 0; j < n; ++j) {
            std::swap(a.at(r1, j), a.at(r2, j));
            std::swap(u.at(r1, j), u.at(r2, j));
        }
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 == c2) return;
        for (std::size_t i = 0; i < n; ++i) {
            std::swap(a.at(i, c1), a.at(i, c2));
            std::swap(v.at(i, c1), v.at(i, c2));
        }
    };
    // Smallest non-zero |entry| in the trailing submatrix, row-major
    // tie-break; (n, n) when the submatrix is zero.
    auto find_pivot = [&](std::size_t t) {
        std::size_t pi = n, pj = n;
        Int best = 0;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < n; ++j) {
                const Int& e = a.at(i, j);
                if (e == 0) continue;
                Int mag = abs_int(e);
                if (pi == n || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        return std::pair<std::size_t, std::size_t>(pi, pj);
    };

    for (std::size_t t = 0; t < n; ++t) {
        while (true) {
            auto [pi, pj] = find_pivot(t);
            if (pi == n) {
                t = n;  // trailing submatrix zero: done
                break;
            }
            swap_rows(t, pi);
            swap_cols(t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (a.at(i, t) == 0) continue;
                Int f = a.at(i, t) / a.at(t, t);
                if (f != 0) add_row(i, t, -f);
                if (a.at(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a.at(t, j) == 0) continue;
                Int f = a.at(t, j) / a.at(t, t);
                if (f != 0) add_col(j, t, -f);
                if (a.at(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // a smaller remainder appeared; re-pivot

            // Enforce d_t | every deeper entry: fold an offending row in
            // and reduce again.
            bool divides = true;
            for (std::size_t i = t + 1; i < n && divides; ++i)
                for (std::size_t j = t + 1; j < n && divides; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (t >= n) break;
    }

    // Normalize diagonal signs.
    for (std::size_t t = 0; t < n; ++t) {
        if (a.at(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) {
                a.at(t, j) = -a.at(t, j);
                u.at(t, j) = -u.at(t, j);
            }
        }
    }

    SnfResult result{std::move(u), std::move(a), std::move(v)};
    if (multiply(multiply(result.u, m), result.v) != result.d)
        throw std::logic_error("smith_normal_form: U*M*V != D");
    for (std::size_t t = 0; t + 1 < n; ++t) {
        const Int& d1 = result.d.at(t, t);
        const Int& d2 = result.d.at(t + 1, t + 1);
        if (d1 == 0 && d2 != 0)
            throw std::logic_error("smith_normal_form: zero before nonzero on diagonal");
        if (d1 != 0 && d2 % d1 != 0)
            throw std::logic_error("smith_normal_form: divisibility chain broken");
    }
    return result;
}

Int determinant(const IntMatrix& m) {
    const std::size_t n = m.n;
    if (n == 0) return 1;
    if (is_tridiagonal(m)) {
        // Cofactor expansion along the last row collapses to a
        // three-term recurrence on leading principal minors.
        Int prev2 = 1;
        Int prev1 = m.at(0, 0);
        for (std::size_t k = 1; k < n; ++k) {
            Int cur = m.at(k, k) * prev1 - m.at(k, k - 1) * m.at(k - 1, k) * prev2;
            prev2 = prev1;
            prev1 = cur;
        }
        return prev1;
    }
    // Bareiss fraction-free elimination.
    IntMatrix a = m;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t swap_row = n;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(swap_row, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

bool is_symmetric(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i + 1; j < m.n; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    return true;
}

AbelianGroup h1_of_surgery(const IntMatrix& m) {
    if (!is_symmetric(m))
        throw std::invalid_argument("linking matrix must be symmetric");
    SnfResult snf = smith_normal_form(m);
    AbelianGroup g;
    for (const Int& d : snf.diagonal()) {
        if (d == 0)
            ++g.free_rank;
        else if (d > 1)
            g.invariant_factors.push_back(d);
    }
    return g;
}

bool is_homology_sphere(const IntMatrix& m) {
    if (!is_symmetric(m))
        throw std::invalid_argument("linking matrix must be symmetric");
    return abs_int(determinant(m)) == 1;
}

IntMatrix chain_linking_matrix(const NegCF& cf) {
    if (cf.coeffs.empty()) throw std::invalid_argument("empty continued fraction");
    IntMatrix m(cf.coeffs.size());
    for (std::size_t i = 0; i < cf.coeffs.size(); ++i) {
        m.at(i, i) = cf.coeffs[i];
        if (i + 1 < cf.coeffs.size()) {
            m.at(i, i + 1) = 1;
            m.at(i + 1, i) = 1;
        }
    }
    return m;
}

IntMatrix star_linking_matrix(long long e0, const std::vector<NegCF>& legs) {
    if (legs.empty()) throw std::invalid_argument("star plumbing requires at least one leg");
    std::size_t dim = 1;
    for (const NegCF& leg : legs) dim += leg.coeffs.size();
    IntMatrix m(dim);
    m.at(0, 0) = e0;
    std::size_t offset = 1;
    for (const NegCF& leg : legs) {
        if (leg.coeffs.empty()) throw std::invalid_argument("star plumbing leg is empty");
        m.at(0, offset) = 1;
        m.at(offset, 0) = 1;
        for (std::size_t i = 0; i < leg.coeffs.size(); ++i) {
            m.at(offset + i, offset + i) = leg.coeffs[i];
            if (i + 1 < leg.coeffs.size()) {
                m.at(offset + i, offset + i + 1) = 1;
                m.at(offset + i + 1, offset + i) = 1;
            }
        }
        offset += leg.coeffs.size();
    }
    return m;
}

std::optional<AbelianGroup> hantzsche_double_test(const AbelianGroup& g) {
    if (g.free_rank != 0)
        throw std::invalid_argument("double test applies to torsion groups only");
    if (g.invariant_factors.size() % 2 != 0) return std::nullopt;
    AbelianGroup half;
    for (std::size_t i = 0; i < g.invariant_factors.size(); i += 2) {
        if (g.invariant_factors[i] != g.invariant_factors[i + 1]) return std::nullopt;
        half.invariant_factors.push_back(g.invariant_factors[i]);
    }
    return half;
}

AbelianGroup h1_of_lens_sum(const ConnectedSum& sum) {
    IntMatrix m(sum.summands.size());
    for (std::size_t i = 0; i < sum.summands.size(); ++i) m.at(i, i) = sum.summands[i].p;
    SnfResult snf = smith_normal_form(m);
    AbelianGroup g;
    for (const Int& d : snf.diagonal())
        if (d > 1) g.invariant_factors.push_back(d);
    return g;
}

IntMatrix read_matrix(std::istream& in) {
    long long n = 0;
    if (!(in >> n) || n < 0) throw std::invalid_argument("matrix file: bad dimension line");
    IntMatrix m(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = 0; j < m.n; ++j) {
            std::string tok;
            if (!(in >> tok))
                throw std::invalid_argument("matrix file: expected " + std::to_string(n * n) +
                                            " entries");
            try {
                m.at(i, j) = Int(tok);
            } catch (const std::runtime_error&) {
                throw std::invalid_argument("matrix file: bad integer '" + tok + "'");
            }
        }
    return m;
}

}  // namespace lensbound
