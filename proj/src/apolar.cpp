#include "ska/apolar.hpp"

#include <algorithm>
#include <unordered_map>

namespace ska {

namespace {

std::vector<size_t> ascending_cols(size_t n) {
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = n - 1 - i;  // reference tables are descending
    return order;
}

std::vector<size_t> descending_cols(size_t n) {
    std::vector<size_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = i;
    return order;
}

std::unordered_map<Monomial, size_t, MonomialHash> index_table(const std::vector<Monomial>& mons) {
    std::unordered_map<Monomial, size_t, MonomialHash> idx;
    idx.reserve(mons.size() * 2);
    for (size_t i = 0; i < mons.size(); ++i) idx.emplace(mons[i], i);
    return idx;
}

Polynomial vector_to_poly(const RingPtr& ring, const std::vector<Scalar>& v,
                          const std::vector<Monomial>& mons) {
    const Field& F = ring->field();
    std::vector<Term> terms;
    for (size_t i = 0; i < mons.size(); ++i)
        if (!F.is_zero(v[i])) terms.push_back(Term{mons[i], v[i]});
    return Polynomial(ring, std::move(terms));
}

// reduce v in place against reduced-echelon rows with the given pivot columns
void reduce_against(std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& rows,
                    const std::vector<size_t>& pivots, const Field& F) {
    for (size_t r = 0; r < rows.size(); ++r) {
        const Scalar& c = v[pivots[r]];
        if (F.is_zero(c)) continue;
        Scalar f = c;
        const auto& row = rows[r];
        for (size_t j = 0; j < v.size(); ++j)
            if (!F.is_zero(row[j])) v[j] = F.sub(v[j], F.mul(f, row[j]));
    }
}

}  // namespace

RingPtr dual_ring_of(const RingPtr& ring) {
    std::vector<std::string> names;
    names.reserve(ring->arity());
    bool ok = true;
    for (const auto& v : ring->vars()) {
        std::string d = v;
        if (!d.empty() && d[0] >= 'a' && d[0] <= 'z')
            d[0] = static_cast<char>(d[0] - 'a' + 'A');
        else
            d = "D" + d;
        names.push_back(d);
    }
    for (size_t i = 0; i < names.size() && ok; ++i)
        for (size_t j = i + 1; j < names.size() && ok; ++j)
            if (names[i] == names[j]) ok = false;
    if (!ok) {
        names.clear();
        for (const auto& v : ring->vars()) names.push_back("D_" + v);
    }
    return make_ring(std::move(names), ring->field());
}

Polynomial contract(const Polynomial& f, const Polynomial& dual_form) {
    const RingPtr& dring = dual_form.ring();
    if (f.ring()->arity() != dring->arity())
        throw std::invalid_argument("contract: arity mismatch");
    const Field& F = dring->field();
    std::vector<Term> terms;
    for (const Term& tf : f.terms()) {
        for (const Term& td : dual_form.terms()) {
            auto q = td.mon.try_div(tf.mon);
            if (!q) continue;
            terms.push_back(Term{*q, F.mul(tf.coeff, td.coeff)});
        }
    }
    return Polynomial(dring, std::move(terms));
}

Polynomial differentiate(const Polynomial& f, const Polynomial& dual_form) {
    const RingPtr& dring = dual_form.ring();
    if (f.ring()->arity() != dring->arity())
        throw std::invalid_argument("differentiate: arity mismatch");
    const Field& F = dring->field();
    std::vector<Term> terms;
    for (const Term& tf : f.terms()) {
        for (const Term& td : dual_form.terms()) {
            auto q = td.mon.try_div(tf.mon);
            if (!q) continue;
            // falling factorial prod over each variable: b(b-1)...(b-a+1)
            Scalar c = F.mul(tf.coeff, td.coeff);
            for (size_t v = 0; v < dring->arity(); ++v) {
                for (uint32_t k = 0; k < tf.mon[v]; ++k)
                    c = F.mul(c, F.from_long(static_cast<long>(td.mon[v] - k)));
            }
            terms.push_back(Term{*q, c});
        }
    }
    return Polynomial(dring, std::move(terms));
}

InverseSystemModule make_inverse_system(RingPtr acting_ring, std::vector<DualForm> gens) {
    if (gens.empty()) throw std::invalid_argument("inverse system needs at least one generator");
    RingPtr dring = gens.front().poly.ring();
    if (dring->arity() != acting_ring->arity())
        throw std::invalid_argument("inverse system: dual ring arity mismatch");
    uint32_t s = gens.front().degree();
    for (const DualForm& g : gens) {
        if (!g.poly.ring()->same_ring(*dring))
            throw std::invalid_argument("inverse system: generators in different rings");
        if (g.degree() != s)
            throw std::invalid_argument("inverse system: generators must share one degree (level case)");
    }
    // linear independence of the generators
    auto mons = monomials_of_degree(dring->arity(), s);
    auto idx = index_table(mons);
    Mat M(dring->field(), gens.size(), mons.size());
    for (size_t i = 0; i < gens.size(); ++i)
        for (const Term& t : gens[i].poly.terms()) M.at(i, idx.at(t.mon)) = t.coeff;
    if (rank(M) != gens.size())
        throw std::invalid_argument("inverse system: generators must be linearly independent");
    InverseSystemModule out;
    out.acting_ring = std::move(acting_ring);
    out.dual_ring = dring;
    for (DualForm& g : gens) out.gens.push_back(std::move(g.poly));
    out.socle_deg = s;
    return out;
}

long module_graded_dimension(const InverseSystemModule& M, uint32_t d) {
    if (d > M.socle_deg) return 0;
    const Field& F = M.dual_ring->field();
    auto cols = monomials_of_degree(M.dual_ring->arity(), d);
    auto cidx = index_table(cols);
    auto rows_mons = monomials_of_degree(M.acting_ring->arity(), M.socle_deg - d);
    Mat A(F, rows_mons.size() * M.gens.size(), cols.size());
    size_t r = 0;
    for (const Polynomial& Fi : M.gens) {
        for (const Monomial& m : rows_mons) {
            Polynomial img = contract(Polynomial::monomial(M.acting_ring, m, F.one()), Fi);
            for (const Term& t : img.terms()) A.at(r, cidx.at(t.mon)) = t.coeff;
            ++r;
        }
    }
    return static_cast<long>(rank(std::move(A)));
}

IdealPresentation apolar_ideal(const InverseSystemModule& M) {
    const RingPtr& S = M.acting_ring;
    const Field& F = S->field();
    size_t n = S->arity();
    uint32_t s = M.socle_deg;

    std::vector<Polynomial> gens;

    // reduced-echelon kernel basis of the previous degree, plus its leading
    // monomials (always the grevlex-largest support monomial of each vector)
    std::vector<std::vector<Scalar>> prev_basis;
    std::vector<size_t> prev_lm;  // descending-table indices
    std::vector<Monomial> prev_mons;

    for (uint32_t d = 1; d <= s + 1; ++d) {
        auto mons = monomials_of_degree(n, d);
        auto idx = index_table(mons);

        // kernel of the contraction map S_d -> sum_i D_(s-d)
        std::vector<std::vector<Scalar>> kernel;
        std::vector<size_t> kernel_lm;
        if (d <= s) {
            auto out_mons = monomials_of_degree(n, s - d);
            auto out_idx = index_table(out_mons);
            Mat C(F, out_mons.size() * M.gens.size(), mons.size());
            for (size_t col = 0; col < mons.size(); ++col) {
                for (size_t i = 0; i < M.gens.size(); ++i) {
                    // coefficient of X^(alpha+beta) in F_i gives the (i,beta) row
                    for (const Term& t : M.gens[i].terms()) {
                        auto q = t.mon.try_div(mons[col]);
                        if (!q) continue;
                        C.at(i * out_mons.size() + out_idx.at(*q), col) = t.coeff;
                    }
                }
            }
            auto asc = ascending_cols(mons.size());
            auto pivots = rref(C, asc);
            kernel = kernel_basis(C, pivots, asc);
            for (const auto& v : kernel) {
                size_t lm = 0;
                while (F.is_zero(v[lm])) ++lm;
                kernel_lm.push_back(lm);
            }
        } else {
            // top degree: ann contains all of S_(s+1)
            kernel.reserve(mons.size());
            for (size_t j = 0; j < mons.size(); ++j) {
                std::vector<Scalar> e(mons.size(), F.zero());
                e[j] = F.one();
                kernel.push_back(std::move(e));
                kernel_lm.push_back(j);
            }
        }

        // leading monomials of S_1 * I_(d-1): products against the previous
        // reduced-echelon basis have pairwise-distinct leading monomials
        std::vector<char> covered(mons.size(), 0);
        size_t covered_count = 0;
        for (size_t b = 0; b < prev_basis.size(); ++b) {
            for (size_t v = 0; v < n; ++v) {
                size_t j = idx.at(prev_mons[prev_lm[b]].mul(Monomial::variable(n, v)));
                if (!covered[j]) {
                    covered[j] = 1;
                    ++covered_count;
                }
            }
        }

        if (covered_count != kernel.size()) {
            // honest fallback: echelonize the product span and reduce the kernel
            Mat P(F, prev_basis.size() * n, mons.size());
            size_t r = 0;
            for (const auto& b : prev_basis) {
                for (size_t v = 0; v < n; ++v) {
                    Monomial xv = Monomial::variable(n, v);
                    for (size_t j = 0; j < prev_mons.size(); ++j)
                        if (!F.is_zero(b[j])) P.at(r, idx.at(prev_mons[j].mul(xv))) = b[j];
                    ++r;
                }
            }
            auto desc = descending_cols(mons.size());
            auto ppiv = rref(P, desc);
            std::vector<std::vector<Scalar>> prows;
            for (size_t i = 0; i < ppiv.size(); ++i) {
                std::vector<Scalar> row(mons.size(), F.zero());
                for (size_t j = 0; j < mons.size(); ++j) row[j] = P.at(i, j);
                prows.push_back(std::move(row));
            }
            std::vector<std::vector<Scalar>> residues;
            for (const auto& kv : kernel) {
                std::vector<Scalar> v = kv;
                reduce_against(v, prows, ppiv, F);
                bool nz = false;
                for (const Scalar& c : v)
                    if (!F.is_zero(c)) { nz = true; break; }
                if (nz) residues.push_back(std::move(v));
            }
            if (!residues.empty()) {
                Mat R(F, residues.size(), mons.size());
                for (size_t i = 0; i < residues.size(); ++i)
                    for (size_t j = 0; j < mons.size(); ++j) R.at(i, j) = residues[i][j];
                auto rpiv = rref(R, desc);
                for (size_t i = 0; i < rpiv.size(); ++i) {
                    std::vector<Scalar> row(mons.size(), F.zero());
                    for (size_t j = 0; j < mons.size(); ++j) row[j] = R.at(i, j);
                    gens.push_back(vector_to_poly(S, row, mons));
                }
            }
        }

        prev_basis = std::move(kernel);
        prev_lm = std::move(kernel_lm);
        prev_mons = std::move(mons);
    }

    return IdealPresentation(S, std::move(gens));
}

std::vector<std::vector<Scalar>> quadric_space_basis(const IdealPresentation& I) {
    if (!I.is_homogeneous())
        throw std::invalid_argument("quadric space extraction requires a homogeneous ideal");
    const Field& F = I.ring->field();
    size_t n = I.arity();
    auto mons = monomials_of_degree(n, 2);
    auto idx = index_table(mons);
    std::vector<std::vector<Scalar>> rows;
    auto add_row = [&](const Polynomial& p) {
        std::vector<Scalar> row(mons.size(), F.zero());
        for (const Term& t : p.terms()) row[idx.at(t.mon)] = t.coeff;
        rows.push_back(std::move(row));
    };
    for (const Polynomial& g : I.gens) {
        if (g.degree() == 2) {
            add_row(g);
        } else if (g.degree() == 1) {
            for (size_t v = 0; v < n; ++v) add_row(g * Polynomial::variable(I.ring, v));
        }
    }
    if (rows.empty()) return {};
    Mat A(F, rows.size(), mons.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < mons.size(); ++j) A.at(i, j) = rows[i][j];
    auto piv = rref(A, descending_cols(mons.size()));
    std::vector<std::vector<Scalar>> basis;
    for (size_t i = 0; i < piv.size(); ++i) {
        std::vector<Scalar> row(mons.size(), F.zero());
        for (size_t j = 0; j < mons.size(); ++j) row[j] = A.at(i, j);
        basis.push_back(std::move(row));
    }
    return basis;
}

std::vector<Polynomial> perp_quadrics(const IdealPresentation& I) {
    const Field& F = I.ring->field();
    if (F.characteristic() == 2)
        throw std::invalid_argument("the degree-2 differentiation pairing needs characteristic != 2");
    size_t n = I.arity();
    auto mons = monomials_of_degree(n, 2);
    auto basis = quadric_space_basis(I);
    RingPtr dring = dual_ring_of(I.ring);
    if (basis.empty()) {
        // the perp of the zero space is everything
        std::vector<Polynomial> all;
        for (const Monomial& m : mons) all.push_back(Polynomial::monomial(dring, m, F.one()));
        return all;
    }
    Mat A(F, basis.size(), mons.size());
    for (size_t i = 0; i < basis.size(); ++i) {
        for (size_t j = 0; j < mons.size(); ++j) {
            // <x^a, x^b> = a! delta_ab; for quadrics a! is 2 on squares, 1 otherwise
            long fact = mons[j].is_squarefree() ? 1 : 2;
            A.at(i, j) = F.mul(basis[i][j], F.from_long(fact));
        }
    }
    auto asc = ascending_cols(mons.size());
    auto piv = rref(A, asc);
    auto ker = kernel_basis(A, piv, asc);
    std::vector<Polynomial> out;
    for (const auto& v : ker) out.push_back(vector_to_poly(dring, v, mons));
    // canonical order: descending leading monomial
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
        return compare_ref(a.terms().front().mon, b.terms().front().mon) > 0;
    });
    return out;
}

namespace {

Polynomial reinterpret_in(const Polynomial& p, const RingPtr& ring) {
    std::vector<Term> terms(p.terms().begin(), p.terms().end());
    return Polynomial(ring, std::move(terms));
}

struct PipelineVerdict {
    bool artinian = false;
    bool quadratically_generated = false;
    bool perp_artinian = false;
    bool positive() const { return artinian && quadratically_generated && perp_artinian; }
};

PipelineVerdict obstruction_pipeline(const IdealPresentation& I,
                                     std::vector<Polynomial>* perp_out, long* dim_out) {
    PipelineVerdict v;
    v.artinian = is_artinian(I);
    auto basis = quadric_space_basis(I);
    if (dim_out) *dim_out = static_cast<long>(basis.size());
    // I is quadratically generated iff every generator lies in (I_2)
    std::vector<Polynomial> qgens;
    {
        auto mons = monomials_of_degree(I.arity(), 2);
        for (const auto& row : basis) {
            std::vector<Term> terms;
            for (size_t j = 0; j < mons.size(); ++j)
                if (!I.ring->field().is_zero(row[j])) terms.push_back(Term{mons[j], row[j]});
            qgens.push_back(Polynomial(I.ring, std::move(terms)));
        }
    }
    GbCache cache;
    IdealPresentation I2(I.ring, qgens);
    v.quadratically_generated = true;
    for (const Polynomial& g : I.gens) {
        if (!membership(g, I2, cache)) {
            v.quadratically_generated = false;
            break;
        }
    }
    std::vector<Polynomial> perp = perp_quadrics(I);
    if (perp_out) *perp_out = perp;
    std::vector<Polynomial> jgens;
    for (const Polynomial& p : perp) jgens.push_back(reinterpret_in(p, I.ring));
    IdealPresentation J(I.ring, std::move(jgens));
    v.perp_artinian = !J.gens.empty() && is_artinian(J);
    return v;
}

std::vector<uint64_t> primes_up_to(uint64_t bound) {
    std::vector<uint64_t> out;
    for (uint64_t q = 2; q <= bound; ++q) {
        bool prime = q >= 2;
        for (uint64_t d = 2; d * d <= q; ++d)
            if (q % d == 0) { prime = false; break; }
        if (prime) out.push_back(q);
    }
    return out;
}

// reduce a QQ presentation mod q; nullopt when a denominator vanishes
std::optional<IdealPresentation> reduce_mod(const IdealPresentation& I, uint64_t q) {
    Field Fq = Field::prime(q);
    RingPtr rq = make_ring(I.ring->vars(), Fq);
    std::vector<Polynomial> gens;
    for (const Polynomial& g : I.gens) {
        std::vector<Term> terms;
        for (const Term& t : g.terms()) {
            const mpq_class& c = t.coeff.rat();
            mpz_class den = c.get_den();
            if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(q)))
                return std::nullopt;
            Scalar s = Fq.from_fraction(c.get_num().get_str(), den.get_str());
            if (!Fq.is_zero(s)) terms.push_back(Term{t.mon, s});
        }
        if (!terms.empty()) gens.push_back(Polynomial(rq, std::move(terms)));
    }
    return IdealPresentation(rq, std::move(gens));
}

}  // namespace

ObstructionReport ert_obstruction(const IdealPresentation& I, const ObstructionOptions& opts) {
    const Field& F = I.ring->field();
    if (F.characteristic() == 2)
        throw std::invalid_argument("the obstruction test needs characteristic != 2");
    if (!I.is_homogeneous())
        throw std::invalid_argument("the obstruction test requires a homogeneous ideal");

    ObstructionReport rep{I};
    PipelineVerdict v = obstruction_pipeline(I, &rep.perp_basis, &rep.quadric_space_dim);
    rep.artinian = v.artinian;
    rep.quadratically_generated = v.quadratically_generated;
    rep.perp_ideal_artinian = v.perp_artinian;
    rep.conclusion = v.positive() ? ObstructionConclusion::no_quadratic_gb_any_coordinates
                                  : ObstructionConclusion::inconclusive;

    if (rep.conclusion == ObstructionConclusion::no_quadratic_gb_any_coordinates &&
        F.kind() == FieldKind::rationals) {
        rep.prime_scan_bound = opts.prime_scan_bound;
        rep.excluded_primes.push_back(2);
        for (uint64_t q : primes_up_to(opts.prime_scan_bound)) {
            if (q == 2) continue;
            auto Iq = reduce_mod(I, q);
            if (!Iq) {
                rep.excluded_primes.push_back(q);
                continue;
            }
            PipelineVerdict vq = obstruction_pipeline(*Iq, nullptr, nullptr);
            if (!vq.positive()) rep.excluded_primes.push_back(q);
        }
        std::string ex;
        for (size_t i = 0; i < rep.excluded_primes.size(); ++i)
            ex += (i ? ", " : "") + std::to_string(rep.excluded_primes[i]);
        rep.caveat =
            "holds over algebraically closed fields of characteristic 0; positive "
            "characteristics checked up to " + std::to_string(opts.prime_scan_bound) +
            ": excluded {" + ex + "}";
    } else if (rep.conclusion == ObstructionConclusion::no_quadratic_gb_any_coordinates) {
        rep.caveat = "holds over the algebraic closure of " + F.name();
    } else {
        rep.caveat = "inconclusive: the obstruction requires an Artinian quadratic ideal whose "
                     "perp ideal is Artinian";
    }
    return rep;
}

QuadricDiagonalization diagonalize_quadric(const Polynomial& f) {
    const RingPtr& ring = f.ring();
    const Field& F = ring->field();
    if (F.characteristic() == 2)
        throw std::invalid_argument("quadric diagonalization needs characteristic != 2");
    if (f.is_zero() || f.degree() != 2 || !f.is_homogeneous())
        throw std::invalid_argument("diagonalize_quadric expects a nonzero homogeneous quadric");
    size_t n = ring->arity();
    Scalar half = F.div(F.one(), F.from_long(2));

    // Gram matrix
    std::vector<std::vector<Scalar>> A(n, std::vector<Scalar>(n, F.zero()));
    for (const Term& t : f.terms()) {
        int v = t.mon.pure_power_variable();
        if (v >= 0) {
            A[v][v] = t.coeff;
        } else {
            size_t i = 0, j = 0;
            bool found_first = false;
            for (size_t k = 0; k < n; ++k) {
                if (t.mon[k] == 1) {
                    if (!found_first) { i = k; found_first = true; }
                    else j = k;
                }
            }
            Scalar c = F.mul(t.coeff, half);
            A[i][j] = c;
            A[j][i] = c;
        }
    }

    std::vector<std::vector<Scalar>> E(n, std::vector<Scalar>(n, F.zero()));
    for (size_t i = 0; i < n; ++i) E[i][i] = F.one();

    auto add_col = [&](std::vector<std::vector<Scalar>>& M, size_t dst, size_t src, const Scalar& c) {
        for (size_t r = 0; r < n; ++r) M[r][dst] = F.add(M[r][dst], F.mul(c, M[r][src]));
    };
    auto add_row = [&](std::vector<std::vector<Scalar>>& M, size_t dst, size_t src, const Scalar& c) {
        for (size_t col = 0; col < n; ++col) M[dst][col] = F.add(M[dst][col], F.mul(c, M[src][col]));
    };
    auto swap_colrow = [&](size_t a, size_t b) {
        for (size_t r = 0; r < n; ++r) std::swap(A[r][a], A[r][b]);
        for (size_t c = 0; c < n; ++c) std::swap(A[a][c], A[b][c]);
        for (size_t r = 0; r < n; ++r) std::swap(E[r][a], E[r][b]);
    };

    for (size_t k = 0; k < n; ++k) {
        if (F.is_zero(A[k][k])) {
            for (size_t j = k + 1; j < n; ++j) {
                if (!F.is_zero(A[j][j])) {
                    swap_colrow(k, j);
                    break;
                }
            }
        }
        if (F.is_zero(A[k][k])) {
            for (size_t j = k + 1; j < n; ++j) {
                if (!F.is_zero(A[k][j])) {
                    add_col(A, k, j, F.one());
                    add_row(A, k, j, F.one());
                    add_col(E, k, j, F.one());
                    break;
                }
            }
        }
        if (F.is_zero(A[k][k])) continue;
        for (size_t j = 0; j < n; ++j) {
            if (j == k || F.is_zero(A[k][j])) continue;
            Scalar c = F.neg(F.div(A[k][j], A[k][k]));
            add_col(A, j, k, c);
            add_row(A, j, k, c);
            add_col(E, j, k, c);
        }
    }

    QuadricDiagonalization out{std::vector<std::optional<Polynomial>>(n), Polynomial::zero(ring), {}};
    for (size_t i = 0; i < n; ++i) {
        Polynomial img = Polynomial::zero(ring);
        for (size_t j = 0; j < n; ++j)
            if (!F.is_zero(E[i][j])) img = img + Polynomial::variable(ring, j).scaled(E[i][j]);
        out.change[i] = img;
    }
    Polynomial diag = Polynomial::zero(ring);
    for (size_t i = 0; i < n; ++i) {
        out.lambda.push_back(A[i][i]);
        if (!F.is_zero(A[i][i])) {
            std::vector<uint32_t> e(n, 0);
            e[i] = 2;
            diag = diag + Polynomial::monomial(ring, Monomial(std::move(e)), A[i][i]);
        }
    }
    out.diagonal = diag;
    return out;
}

}  // namespace ska
