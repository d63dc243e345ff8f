#include "ska/gallery.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "ska/parser.hpp"

namespace ska {

namespace {

std::string ij_name(size_t i, size_t j, size_t m, size_t n) {
    if (m <= 9 && n <= 9) return "x" + std::to_string(i) + std::to_string(j);
    return "x" + std::to_string(i) + "_" + std::to_string(j);
}

Polynomial reinterpret_in(const Polynomial& p, const RingPtr& ring) {
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    return Polynomial(ring, std::move(terms));
}

std::vector<Polynomial> dedupe_up_to_scalar(std::vector<Polynomial> polys) {
    std::vector<Polynomial> out;
    std::set<std::string> seen;
    for (Polynomial& p : polys) {
        if (p.is_zero()) continue;
        Polynomial canon = p.monic_ref();
        if (seen.insert(canon.str()).second) out.push_back(std::move(canon));
    }
    return out;
}

}  // namespace

MatrixShape MatrixShape::generic(size_t m, size_t n, std::set<std::pair<int, int>> zeros) {
    return MatrixShape{Kind::generic, m, n, std::move(zeros)};
}

MatrixShape MatrixShape::symmetric(size_t n, std::set<std::pair<int, int>> zeros) {
    std::set<std::pair<int, int>> norm;
    for (auto [i, j] : zeros) norm.insert({std::min(i, j), std::max(i, j)});
    return MatrixShape{Kind::symmetric, n, n, std::move(norm)};
}

MatrixShape MatrixShape::skew(size_t n) { return MatrixShape{Kind::skew, n, n, {}}; }

MatrixShape MatrixShape::hankel(size_t m, size_t n) { return MatrixShape{Kind::hankel, m, n, {}}; }

SymbolicMatrix build_matrix(const MatrixShape& shape, const Field& field) {
    SymbolicMatrix M;
    M.m = shape.m;
    M.n = shape.n;
    std::vector<std::string> vars;
    switch (shape.kind) {
        case MatrixShape::Kind::generic:
            for (size_t i = 1; i <= shape.m; ++i)
                for (size_t j = 1; j <= shape.n; ++j)
                    if (!shape.zeros.count({static_cast<int>(i), static_cast<int>(j)}))
                        vars.push_back(ij_name(i, j, shape.m, shape.n));
            break;
        case MatrixShape::Kind::symmetric:
            for (size_t i = 1; i <= shape.n; ++i)
                for (size_t j = i; j <= shape.n; ++j)
                    if (!shape.zeros.count({static_cast<int>(i), static_cast<int>(j)}))
                        vars.push_back(ij_name(i, j, shape.n, shape.n));
            break;
        case MatrixShape::Kind::skew:
            for (size_t i = 1; i <= shape.n; ++i)
                for (size_t j = i + 1; j <= shape.n; ++j)
                    vars.push_back(ij_name(i, j, shape.n, shape.n));
            break;
        case MatrixShape::Kind::hankel:
            for (size_t k = 1; k <= shape.m + shape.n - 1; ++k) vars.push_back("x" + std::to_string(k));
            break;
    }
    M.ring = make_ring(vars, field);

    auto var_poly = [&](const std::string& name) {
        return Polynomial::variable(M.ring, static_cast<size_t>(M.ring->index_of(name)));
    };
    Polynomial zero = Polynomial::zero(M.ring);
    M.entry.assign(shape.m, std::vector<Polynomial>(shape.n, zero));
    for (size_t i = 1; i <= shape.m; ++i) {
        for (size_t j = 1; j <= shape.n; ++j) {
            Polynomial e = zero;
            switch (shape.kind) {
                case MatrixShape::Kind::generic:
                    if (!shape.zeros.count({static_cast<int>(i), static_cast<int>(j)}))
                        e = var_poly(ij_name(i, j, shape.m, shape.n));
                    break;
                case MatrixShape::Kind::symmetric: {
                    size_t a = std::min(i, j), b = std::max(i, j);
                    if (!shape.zeros.count({static_cast<int>(a), static_cast<int>(b)}))
                        e = var_poly(ij_name(a, b, shape.n, shape.n));
                    break;
                }
                case MatrixShape::Kind::skew: {
                    if (i == j) break;
                    size_t a = std::min(i, j), b = std::max(i, j);
                    e = var_poly(ij_name(a, b, shape.n, shape.n));
                    if (i > j) e = -e;
                    break;
                }
                case MatrixShape::Kind::hankel:
                    e = var_poly("x" + std::to_string(i + j - 1));
                    break;
            }
            M.entry[i - 1][j - 1] = e;
        }
    }
    return M;
}

Polynomial det(const SymbolicMatrix& M) {
    if (M.m != M.n) throw std::invalid_argument("det needs a square matrix");
    // Laplace expansion along the first remaining row
    std::vector<size_t> cols(M.n);
    for (size_t j = 0; j < M.n; ++j) cols[j] = j;
    std::function<Polynomial(size_t, std::vector<size_t>&)> rec =
        [&](size_t row, std::vector<size_t>& cs) -> Polynomial {
        if (cs.empty()) return Polynomial::constant(M.ring, M.ring->field().one());
        Polynomial acc = Polynomial::zero(M.ring);
        for (size_t k = 0; k < cs.size(); ++k) {
            const Polynomial& e = M.entry[row][cs[k]];
            if (e.is_zero()) continue;
            std::vector<size_t> rest;
            for (size_t t = 0; t < cs.size(); ++t)
                if (t != k) rest.push_back(cs[t]);
            Polynomial sub = rec(row + 1, rest);
            Polynomial contrib = e * sub;
            if (k % 2 == 1) contrib = -contrib;
            acc = acc + contrib;
        }
        return acc;
    };
    return rec(0, cols);
}

IdealPresentation minors2(const MatrixShape& shape, const Field& field) {
    if (shape.kind == MatrixShape::Kind::skew)
        throw std::invalid_argument("minors2 expects a generic, symmetric or hankel shape");
    SymbolicMatrix M = build_matrix(shape, field);
    std::vector<Polynomial> out;
    auto minor = [&](size_t i1, size_t i2, size_t j1, size_t j2) {
        return M.entry[i1][j1] * M.entry[i2][j2] - M.entry[i1][j2] * M.entry[i2][j1];
    };
    if (shape.kind == MatrixShape::Kind::symmetric) {
        // [I|J] and [J|I] coincide up to sign; enumerate I <= J only
        std::vector<std::pair<size_t, size_t>> pairs;
        for (size_t a = 0; a < shape.n; ++a)
            for (size_t b = a + 1; b < shape.n; ++b) pairs.push_back({a, b});
        for (size_t p = 0; p < pairs.size(); ++p)
            for (size_t q = p; q < pairs.size(); ++q)
                out.push_back(minor(pairs[p].first, pairs[p].second, pairs[q].first, pairs[q].second));
    } else {
        for (size_t i1 = 0; i1 < M.m; ++i1)
            for (size_t i2 = i1 + 1; i2 < M.m; ++i2)
                for (size_t j1 = 0; j1 < M.n; ++j1)
                    for (size_t j2 = j1 + 1; j2 < M.n; ++j2) out.push_back(minor(i1, i2, j1, j2));
    }
    return IdealPresentation(M.ring, dedupe_up_to_scalar(std::move(out)));
}

RingPtr skew_ring(size_t N, const Field& field) {
    return build_matrix(MatrixShape::skew(N), field).ring;
}

namespace {

Polynomial pfaffian_of(const SymbolicMatrix& M, const std::vector<size_t>& rows,
                       std::map<std::vector<size_t>, Polynomial>& memo) {
    if (rows.empty()) return Polynomial::constant(M.ring, M.ring->field().one());
    auto it = memo.find(rows);
    if (it != memo.end()) return it->second;
    Polynomial acc = Polynomial::zero(M.ring);
    for (size_t k = 1; k < rows.size(); ++k) {
        const Polynomial& e = M.entry[rows[0]][rows[k]];
        if (e.is_zero()) continue;
        std::vector<size_t> rest;
        for (size_t t = 1; t < rows.size(); ++t)
            if (t != k) rest.push_back(rows[t]);
        Polynomial contrib = e * pfaffian_of(M, rest, memo);
        if (k % 2 == 0) contrib = -contrib;
        acc = acc + contrib;
    }
    memo.emplace(rows, acc);
    return acc;
}

}  // namespace

std::vector<Polynomial> pfaffians(size_t N, size_t size, const Field& field) {
    if (size % 2 != 0) throw std::invalid_argument("Pfaffians exist for even sizes only");
    if (size > N) throw std::invalid_argument("Pfaffian size exceeds the matrix");
    SymbolicMatrix M = build_matrix(MatrixShape::skew(N), field);
    std::map<std::vector<size_t>, Polynomial> memo;
    std::vector<Polynomial> out;
    std::vector<size_t> subset(size);
    std::function<void(size_t, size_t)> choose = [&](size_t start, size_t k) {
        if (k == size) {
            std::vector<size_t> rows(subset);
            out.push_back(pfaffian_of(M, rows, memo));
            return;
        }
        for (size_t v = start; v + (size - k) <= N; ++v) {
            subset[k] = v;
            choose(v + 1, k + 1);
        }
    };
    choose(0, 0);
    return out;
}

// --------------------------------------------------------- apolar galleries

std::vector<Polynomial> minors_apolar_gens(size_t m, size_t n, const Field& field) {
    RingPtr r = build_matrix(MatrixShape::generic(m, n), field).ring;
    auto x = [&](size_t i, size_t k) {
        return Polynomial::variable(r, static_cast<size_t>(r->index_of(ij_name(i, k, m, n))));
    };
    std::vector<Polynomial> out;
    for (size_t i = 1; i <= m; ++i)
        for (size_t k = 1; k <= n; ++k) out.push_back(x(i, k) * x(i, k));
    for (size_t i = 1; i <= m; ++i)
        for (size_t j = i + 1; j <= m; ++j)
            for (size_t k = 1; k <= n; ++k) out.push_back(x(i, k) * x(j, k));
    for (size_t i = 1; i <= m; ++i)
        for (size_t k = 1; k <= n; ++k)
            for (size_t l = k + 1; l <= n; ++l) out.push_back(x(i, k) * x(i, l));
    for (size_t i = 1; i <= m; ++i)
        for (size_t j = i + 1; j <= m; ++j)
            for (size_t k = 1; k <= n; ++k)
                for (size_t l = k + 1; l <= n; ++l)
                    out.push_back(x(i, k) * x(j, l) + x(i, l) * x(j, k));
    return out;
}

std::vector<Polynomial> permanent_apolar_gens(size_t m, size_t n, const Field& field) {
    RingPtr r = build_matrix(MatrixShape::generic(m, n), field).ring;
    auto x = [&](size_t i, size_t k) {
        return Polynomial::variable(r, static_cast<size_t>(r->index_of(ij_name(i, k, m, n))));
    };
    std::vector<Polynomial> out;
    for (size_t i = 1; i <= m; ++i)
        for (size_t k = 1; k <= n; ++k) out.push_back(x(i, k) * x(i, k));
    for (size_t i = 1; i <= m; ++i)
        for (size_t j = i + 1; j <= m; ++j)
            for (size_t k = 1; k <= n; ++k) out.push_back(x(i, k) * x(j, k));
    for (size_t i = 1; i <= m; ++i)
        for (size_t k = 1; k <= n; ++k)
            for (size_t l = k + 1; l <= n; ++l) out.push_back(x(i, k) * x(i, l));
    for (size_t i = 1; i <= m; ++i)
        for (size_t j = i + 1; j <= m; ++j)
            for (size_t k = 1; k <= n; ++k)
                for (size_t l = k + 1; l <= n; ++l)
                    out.push_back(x(i, k) * x(j, l) - x(i, l) * x(j, k));
    return out;
}

std::vector<Polynomial> pfaffian_apolar_gens(size_t N, const Field& field) {
    RingPtr r = skew_ring(N, field);
    auto x = [&](size_t i, size_t j) {
        return Polynomial::variable(r, static_cast<size_t>(r->index_of(ij_name(i, j, N, N))));
    };
    std::vector<Polynomial> out;
    for (size_t i = 1; i <= N; ++i)
        for (size_t j = i + 1; j <= N; ++j) out.push_back(x(i, j) * x(i, j));
    for (size_t i = 1; i <= N; ++i)
        for (size_t j = i + 1; j <= N; ++j)
            for (size_t k = j + 1; k <= N; ++k) {
                out.push_back(x(i, j) * x(i, k));
                out.push_back(x(i, j) * x(j, k));
                out.push_back(x(i, k) * x(j, k));
            }
    for (size_t i = 1; i <= N; ++i)
        for (size_t j = i + 1; j <= N; ++j)
            for (size_t k = j + 1; k <= N; ++k)
                for (size_t l = k + 1; l <= N; ++l) {
                    out.push_back(x(i, j) * x(k, l) + x(i, k) * x(j, l));
                    out.push_back(x(i, l) * x(j, k) + x(i, k) * x(j, l));
                    out.push_back(x(i, j) * x(k, l) - x(i, l) * x(j, k));
                }
    return out;
}

std::vector<Polynomial> generalized_2_permanents(size_t m, size_t n, const Field& field) {
    RingPtr r = build_matrix(MatrixShape::generic(m, n), field).ring;
    auto x = [&](size_t i, size_t k) {
        return Polynomial::variable(r, static_cast<size_t>(r->index_of(ij_name(i, k, m, n))));
    };
    std::vector<Polynomial> out;
    for (size_t i1 = 1; i1 <= m; ++i1)
        for (size_t i2 = i1; i2 <= m; ++i2)
            for (size_t j1 = 1; j1 <= n; ++j1)
                for (size_t j2 = j1; j2 <= n; ++j2)
                    out.push_back(x(i1, j1) * x(i2, j2) + x(i1, j2) * x(i2, j1));
    return dedupe_up_to_scalar(std::move(out));
}

InverseSystemModule maximal_minors_module(size_t m, size_t n, const Field& field) {
    if (m > n) throw std::invalid_argument("maximal minors need m <= n");
    SymbolicMatrix M = build_matrix(MatrixShape::generic(m, n), field);
    RingPtr dual = dual_ring_of(M.ring);
    std::vector<DualForm> forms;
    std::vector<size_t> cols(m);
    std::function<void(size_t, size_t)> choose = [&](size_t start, size_t k) {
        if (k == m) {
            SymbolicMatrix sub;
            sub.ring = M.ring;
            sub.m = sub.n = m;
            sub.entry.assign(m, std::vector<Polynomial>(m, Polynomial::zero(M.ring)));
            for (size_t i = 0; i < m; ++i)
                for (size_t j = 0; j < m; ++j) sub.entry[i][j] = M.entry[i][cols[j]];
            forms.push_back(DualForm(reinterpret_in(det(sub), dual)));
            return;
        }
        for (size_t c = start; c + (m - k) <= n; ++c) {
            cols[k] = c;
            choose(c + 1, k + 1);
        }
    };
    choose(0, 0);
    return make_inverse_system(M.ring, std::move(forms));
}

InverseSystemModule pfaffian_module(size_t N, const Field& field) {
    size_t size = (N / 2) * 2;
    RingPtr acting = skew_ring(N, field);
    RingPtr dual = dual_ring_of(acting);
    std::vector<DualForm> forms;
    for (const Polynomial& p : pfaffians(N, size, field))
        forms.push_back(DualForm(reinterpret_in(p, dual)));
    return make_inverse_system(acting, std::move(forms));
}

InverseSystemModule symmetric_det3_module(const Field& field) {
    SymbolicMatrix M = build_matrix(MatrixShape::symmetric(3), field);
    RingPtr dual = dual_ring_of(M.ring);
    std::vector<DualForm> forms;
    forms.push_back(DualForm(reinterpret_in(det(M), dual)));
    return make_inverse_system(M.ring, std::move(forms));
}

// ------------------------------------------------------------ 27 lines

namespace {

int c_index(int i, int j) {
    if (i > j) std::swap(i, j);
    // pairs (1,2),(1,3),...,(5,6) in lexicographic order
    int idx = 0;
    for (int a = 1; a <= 6; ++a) {
        for (int b = a + 1; b <= 6; ++b) {
            if (a == i && b == j) return 12 + idx;
            ++idx;
        }
    }
    throw std::logic_error("bad c-line index");
}

}  // namespace

LinesIncidence lines27() {
    LinesIncidence L;
    for (int i = 1; i <= 6; ++i) L.line_names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= 6; ++i) L.line_names.push_back("b" + std::to_string(i));
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j)
            L.line_names.push_back("c" + std::to_string(i) + std::to_string(j));

    auto add_plane = [&](int l1, int l2, int l3) {
        std::array<int, 3> p{l1, l2, l3};
        std::sort(p.begin(), p.end());
        L.planes.push_back(p);
    };
    // a_i b_j c_ij and a_j b_i c_ij
    for (int i = 1; i <= 6; ++i)
        for (int j = i + 1; j <= 6; ++j) {
            add_plane(i - 1, 6 + j - 1, c_index(i, j));
            add_plane(j - 1, 6 + i - 1, c_index(i, j));
        }
    // c_ij c_kl c_mn over perfect matchings of [6]
    std::function<void(std::vector<int>, std::vector<std::pair<int, int>>)> match =
        [&](std::vector<int> left, std::vector<std::pair<int, int>> acc) {
            if (left.empty()) {
                add_plane(c_index(acc[0].first, acc[0].second),
                          c_index(acc[1].first, acc[1].second),
                          c_index(acc[2].first, acc[2].second));
                return;
            }
            int a = left[0];
            for (size_t k = 1; k < left.size(); ++k) {
                std::vector<int> rest;
                for (size_t t = 1; t < left.size(); ++t)
                    if (t != k) rest.push_back(left[t]);
                auto acc2 = acc;
                acc2.push_back({a, left[k]});
                match(rest, acc2);
            }
        };
    match({1, 2, 3, 4, 5, 6}, {});

    L.line_planes.assign(27, {});
    for (size_t p = 0; p < L.planes.size(); ++p)
        for (int l : L.planes[p]) L.line_planes[l].push_back(static_cast<int>(p));
    return L;
}

int LinesIncidence::common_plane(int l1, int l2) const {
    for (int p : line_planes[l1]) {
        const auto& pl = planes[p];
        if (pl[0] == l2 || pl[1] == l2 || pl[2] == l2) return p;
    }
    return -1;
}

LinesLemmaReport verify_lemma_27lines(const LinesIncidence& L) {
    LinesLemmaReport rep;
    size_t nl = L.line_names.size();

    std::vector<std::vector<char>> coplanar(nl, std::vector<char>(nl, 0));
    for (const auto& p : L.planes) {
        coplanar[p[0]][p[1]] = coplanar[p[1]][p[0]] = 1;
        coplanar[p[0]][p[2]] = coplanar[p[2]][p[0]] = 1;
        coplanar[p[1]][p[2]] = coplanar[p[2]][p[1]] = 1;
    }

    // (i) every 4-subset contains a pair in no common plane
    rep.four_subsets_have_skew_pair = true;
    for (size_t a = 0; a < nl; ++a)
        for (size_t b = a + 1; b < nl; ++b)
            for (size_t c = b + 1; c < nl; ++c)
                for (size_t d = c + 1; d < nl; ++d) {
                    ++rep.four_subsets_checked;
                    bool has_skew = !(coplanar[a][b] && coplanar[a][c] && coplanar[a][d] &&
                                      coplanar[b][c] && coplanar[b][d] && coplanar[c][d]);
                    if (!has_skew) rep.four_subsets_have_skew_pair = false;
                }

    // (ii) pairwise-coplanar triples lie in one common plane
    rep.coplanar_triples_share_plane = true;
    for (size_t a = 0; a < nl; ++a)
        for (size_t b = a + 1; b < nl; ++b)
            for (size_t c = b + 1; c < nl; ++c) {
                if (!(coplanar[a][b] && coplanar[a][c] && coplanar[b][c])) continue;
                int pab = L.common_plane(static_cast<int>(a), static_cast<int>(b));
                int pac = L.common_plane(static_cast<int>(a), static_cast<int>(c));
                int pbc = L.common_plane(static_cast<int>(b), static_cast<int>(c));
                if (pab < 0 || pab != pac || pab != pbc)
                    rep.coplanar_triples_share_plane = false;
            }

    // (iii) for each line l and plane rho avoiding it, some plane through l
    // meets rho in a line
    rep.planes_meet_through_lines = true;
    for (size_t l = 0; l < nl; ++l) {
        for (size_t p = 0; p < L.planes.size(); ++p) {
            const auto& rho = L.planes[p];
            if (rho[0] == static_cast<int>(l) || rho[1] == static_cast<int>(l) ||
                rho[2] == static_cast<int>(l))
                continue;
            ++rep.line_plane_pairs_checked;
            bool found = false;
            for (int sp : L.line_planes[l]) {
                const auto& sigma = L.planes[sp];
                for (int a : sigma)
                    for (int b : rho)
                        if (a == b) found = true;
            }
            if (!found) rep.planes_meet_through_lines = false;
        }
    }
    return rep;
}

LinesIncidence drop_plane(LinesIncidence L, size_t plane_index) {
    L.planes.erase(L.planes.begin() + static_cast<long>(plane_index));
    L.line_planes.assign(27, {});
    for (size_t p = 0; p < L.planes.size(); ++p)
        for (int l : L.planes[p]) L.line_planes[l].push_back(static_cast<int>(p));
    return L;
}

RingPtr cayley_ring(const Field& field) {
    auto names = lines27().line_names;
    // c21 spells c12 and so on
    std::vector<std::pair<std::string, int>> aliases;
    for (size_t v = 0; v < names.size(); ++v) {
        const std::string& nm = names[v];
        if (nm[0] == 'c')
            aliases.push_back({std::string("c") + nm[2] + nm[1], static_cast<int>(v)});
    }
    return std::make_shared<Ring>(std::move(names), field, aliases);
}

CayleyReport cayley_monomial_ideal(const std::vector<int>& ranked, const Field& field) {
    LinesIncidence L = lines27();
    size_t nl = 27;
    if (ranked.size() != nl) throw std::invalid_argument("cayley order must rank all 27 lines");
    RingPtr ring = cayley_ring(field);
    MonomialOrder order = MonomialOrder::revlex(ranked);  // validates the permutation

    CayleyReport rep;
    rep.ranked = ranked;

    auto pair_mon = [&](int a, int b) {
        std::vector<uint32_t> e(nl, 0);
        e[a] += 1;
        e[b] += 1;
        return Monomial(std::move(e));
    };
    auto plane_mon = [&](int p) {
        std::vector<uint32_t> e(nl, 0);
        for (int l : L.planes[p]) e[l] += 1;
        return Monomial(std::move(e));
    };

    std::vector<Monomial> gens;
    std::vector<std::vector<char>> pair_in_J(nl, std::vector<char>(nl, 0));
    for (size_t l = 0; l < nl; ++l) gens.push_back(pair_mon(static_cast<int>(l), static_cast<int>(l)));
    for (size_t a = 0; a < nl; ++a)
        for (size_t b = a + 1; b < nl; ++b)
            if (L.common_plane(static_cast<int>(a), static_cast<int>(b)) < 0) {
                gens.push_back(pair_mon(static_cast<int>(a), static_cast<int>(b)));
                pair_in_J[a][b] = pair_in_J[b][a] = 1;
            }

    // binomial leading terms: for each line, the four non-minimal planes through it
    for (size_t l = 0; l < nl; ++l) {
        int min_plane = -1;
        for (int p : L.line_planes[l]) {
            if (min_plane < 0 || order.compare(plane_mon(p), plane_mon(min_plane)) < 0) min_plane = p;
        }
        for (int p : L.line_planes[l]) {
            if (p == min_plane) continue;
            Monomial q = plane_mon(p).div(Monomial::variable(nl, l));
            int a = -1, b = -1;
            for (size_t v = 0; v < nl; ++v) {
                if (q[v] > 0) {
                    if (a < 0) a = static_cast<int>(v);
                    else b = static_cast<int>(v);
                }
            }
            gens.push_back(q);
            pair_in_J[a][b] = pair_in_J[b][a] = 1;
        }
    }

    rep.J = minimalize_monomials(gens);
    rep.quadratic_count = rep.J.min_gens.size();
    rep.at_least_351_quadrics = rep.quadratic_count >= 351;

    // the revlex-lowest tritangent plane overall
    int lowest = 0;
    for (size_t p = 1; p < L.planes.size(); ++p)
        if (order.compare(plane_mon(static_cast<int>(p)), plane_mon(lowest)) < 0)
            lowest = static_cast<int>(p);
    rep.lowest_plane = lowest;

    // claim A: every squarefree degree-4 monomial has a pair inside J (the
    // non-squarefree ones contain a square, which is always in J)
    rep.all_degree4_in_J = true;
    uint64_t open4 = 0;
    for (size_t a = 0; a < nl; ++a)
        for (size_t b = a + 1; b < nl; ++b)
            for (size_t c = b + 1; c < nl; ++c)
                for (size_t d = c + 1; d < nl; ++d) {
                    bool covered = pair_in_J[a][b] || pair_in_J[a][c] || pair_in_J[a][d] ||
                                   pair_in_J[b][c] || pair_in_J[b][d] || pair_in_J[c][d];
                    if (!covered) {
                        rep.all_degree4_in_J = false;
                        ++open4;
                    }
                }

    // claim C: the only standard cubic is the lowest tritangent plane
    std::vector<Monomial> standard_cubics;
    for (size_t a = 0; a < nl; ++a)
        for (size_t b = a + 1; b < nl; ++b)
            for (size_t c = b + 1; c < nl; ++c) {
                if (pair_in_J[a][b] || pair_in_J[a][c] || pair_in_J[b][c]) continue;
                std::vector<uint32_t> e(nl, 0);
                e[a] = e[b] = e[c] = 1;
                standard_cubics.push_back(Monomial(std::move(e)));
            }
    rep.one_standard_cubic =
        standard_cubics.size() == 1 && standard_cubics[0] == plane_mon(lowest);
    if (standard_cubics.size() == 1) rep.standard_cubic = standard_cubics[0];

    rep.hf = {1, static_cast<long>(nl),
              static_cast<long>(nl * (nl + 1) / 2 - rep.quadratic_count),
              static_cast<long>(standard_cubics.size()), static_cast<long>(open4)};
    return rep;
}

// ------------------------------------------------------- counterexamples

IdealPresentation clebsch_ideal(const Field& field) {
    RingPtr r = make_ring({"x", "y", "z", "t"}, field);
    auto P = [&](const char* s) { return parse_polynomial(s, r); };
    return IdealPresentation(
        r, {P("x^2 - y*z"), P("y^2 - z*t"), P("z^2 - t*x"), P("t^2 - x*y"), P("x*z"), P("y*t")});
}

std::vector<Polynomial> clebsch_gb16(const Field& field) {
    IdealPresentation I = clebsch_ideal(field);
    auto P = [&](const char* s) { return parse_polynomial(s, I.ring); };
    std::vector<Polynomial> out = I.gens;
    for (const char* s : {"x^3", "y^3", "z^3", "t^3", "x*y^2", "y*z^2", "z*t^2", "t*x^2",
                          "x^2*y - z^2*t", "y^2*z - t^2*x"})
        out.push_back(P(s));
    return out;
}

InverseSystemModule clebsch_module(const Field& field) {
    RingPtr acting = make_ring({"x", "y", "z", "t"}, field);
    RingPtr dual = dual_ring_of(acting);
    Polynomial F = parse_polynomial("X^2*Y + Y^2*Z + Z^2*T + T^2*X", dual);
    return make_inverse_system(acting, {DualForm(F)});
}

IdealPresentation cycle_family(size_t n, const Field& field) {
    if (n < 5) throw std::invalid_argument("cycle family needs n >= 5");
    RingPtr r = make_ring_xn(n, field);
    size_t k = (n + 1) / 2;
    auto var = [&](size_t i) {  // 1-based, cyclic
        return Polynomial::variable(r, (i - 1) % n);
    };
    std::vector<Polynomial> gens;
    for (size_t i = 1; i <= n; ++i) gens.push_back(var(i) * var(i) - var(i + k - 1) * var(i + k));
    for (size_t i = 1; i <= n; ++i)
        for (size_t j = i + 1; j <= n; ++j) {
            bool edge = (j == i + 1) || (i == 1 && j == n);
            if (!edge) gens.push_back(var(i) * var(j));
        }
    return IdealPresentation(r, std::move(gens));
}

std::vector<Polynomial> cycle_family_gb(size_t n, const Field& field) {
    IdealPresentation I = cycle_family(n, field);
    auto var = [&](size_t i) { return Polynomial::variable(I.ring, (i - 1) % n); };
    std::vector<Polynomial> out = I.gens;
    for (size_t i = 1; i <= n; ++i) {
        out.push_back(var(i) * var(i) * var(i));
        out.push_back(var(i) * var(i) * var(i + 1));
        out.push_back(var(i) * var(i) * var(i + n - 1));
    }
    return out;
}

InverseSystemModule cycle_module(size_t n, const Field& field) {
    if (n < 5) throw std::invalid_argument("cycle family needs n >= 5");
    RingPtr acting = make_ring_xn(n, field);
    RingPtr dual = dual_ring_of(acting);
    size_t k = (n + 1) / 2;
    auto var = [&](size_t i) { return Polynomial::variable(dual, (i - 1) % n); };
    std::vector<DualForm> forms;
    for (size_t i = 1; i <= n; ++i)
        forms.push_back(DualForm(var(i) * var(i) + var(i + k - 1) * var(i + k)));
    return make_inverse_system(acting, std::move(forms));
}

SimplicialForm simplicial_form(size_t n_vertices, const std::vector<std::vector<int>>& facets,
                               const Field& field) {
    if (facets.empty()) throw std::invalid_argument("simplicial form needs at least one facet");
    size_t dim = facets.front().size();
    for (const auto& G : facets) {
        if (G.size() != dim) throw std::invalid_argument("simplicial complex must be pure");
        for (int v : G)
            if (v < 1 || static_cast<size_t>(v) > n_vertices)
                throw std::invalid_argument("facet vertex out of range");
    }
    std::vector<std::string> vars;
    for (size_t i = 1; i <= n_vertices; ++i) vars.push_back("x" + std::to_string(i));
    for (size_t g = 1; g <= facets.size(); ++g) vars.push_back("z" + std::to_string(g));
    RingPtr acting = make_ring(std::move(vars), field);
    RingPtr dual = dual_ring_of(acting);
    Polynomial F = Polynomial::zero(dual);
    for (size_t g = 0; g < facets.size(); ++g) {
        Polynomial term = Polynomial::variable(dual, n_vertices + g);
        for (int v : facets[g]) term = term * Polynomial::variable(dual, static_cast<size_t>(v - 1));
        F = F + term;
    }
    return SimplicialForm{acting, DualForm(F)};
}

// ------------------------------------------------------------- CLI names

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep)) out.push_back(item);
    return out;
}

std::pair<size_t, size_t> parse_mxn(const std::string& s) {
    auto x = s.find('x');
    if (x == std::string::npos) throw std::invalid_argument("expected MxN, got " + s);
    return {std::stoul(s.substr(0, x)), std::stoul(s.substr(x + 1))};
}

std::set<std::pair<int, int>> parse_zeros(const std::string& s) {
    // zeros=i,j;i,j
    std::set<std::pair<int, int>> out;
    for (const std::string& pair : split(s, ';')) {
        auto parts = split(pair, ',');
        if (parts.size() != 2) throw std::invalid_argument("zeros entries look like i,j");
        out.insert({std::stoi(parts[0]), std::stoi(parts[1])});
    }
    return out;
}

}  // namespace

bool is_gallery_name(const std::string& name) {
    return name == "clebsch" || name == "cayley" || name.rfind("minors:", 0) == 0 ||
           name.rfind("pfaffians:", 0) == 0 || name.rfind("apolar:", 0) == 0 ||
           name.rfind("cycle:", 0) == 0;
}

IdealPresentation gallery_ideal(const std::string& name, const Field& field) {
    auto parts = split(name, ':');
    if (name == "clebsch") return clebsch_ideal(field);
    if (name == "cayley") {
        std::vector<int> id(27);
        for (int i = 0; i < 27; ++i) id[i] = i;
        CayleyReport rep = cayley_monomial_ideal(id, field);
        RingPtr r = cayley_ring(field);
        std::vector<Polynomial> gens;
        for (const Monomial& m : rep.J.min_gens)
            gens.push_back(Polynomial::monomial(r, m, field.one()));
        return IdealPresentation(r, std::move(gens));
    }
    if (parts[0] == "cycle" && parts.size() == 2) return cycle_family(std::stoul(parts[1]), field);
    if (parts[0] == "minors" && parts.size() >= 3) {
        std::set<std::pair<int, int>> zeros;
        size_t zero_arg = 3;
        if (parts.size() > zero_arg) {
            const std::string& z = parts[zero_arg];
            if (z.rfind("zeros=", 0) != 0) throw std::invalid_argument("expected zeros=..., got " + z);
            zeros = parse_zeros(z.substr(6));
        }
        if (parts[1] == "gen") {
            auto [m, n] = parse_mxn(parts[2]);
            return minors2(MatrixShape::generic(m, n, zeros), field);
        }
        if (parts[1] == "sym")
            return minors2(MatrixShape::symmetric(std::stoul(parts[2]), zeros), field);
        if (parts[1] == "hankel") {
            auto [m, n] = parse_mxn(parts[2]);
            return minors2(MatrixShape::hankel(m, n), field);
        }
    }
    if (parts[0] == "pfaffians" && parts.size() == 3) {
        size_t N = std::stoul(parts[1]);
        std::vector<Polynomial> gens = pfaffians(N, std::stoul(parts[2]), field);
        return IdealPresentation(skew_ring(N, field), std::move(gens));
    }
    if (parts[0] == "apolar" && parts.size() >= 2) {
        if (parts[1] == "minors" && parts.size() == 3) {
            auto [m, n] = parse_mxn(parts[2]);
            return apolar_ideal(maximal_minors_module(m, n, field));
        }
        if (parts[1] == "pf" && parts.size() == 3)
            return apolar_ideal(pfaffian_module(std::stoul(parts[2]), field));
        if (parts[1] == "symdet") return apolar_ideal(symmetric_det3_module(field));
    }
    throw std::invalid_argument("unknown gallery name: " + name);
}

}  // namespace ska
