#include "gdz/generator.hpp"

#include "gdz/linalg.hpp"

namespace gdz {

namespace {

// splitmix64: tiny, stateful, identical on every platform
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    long pick(long lo, long hi) { // inclusive, requires lo <= hi
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(long num, long den) { return pick(1, den) <= num; }
};

struct Pool {
    long lo, hi;
    bool halves;
};

ExactScalar rnd_scalar(Rng& rng, const Pool& pool) {
    long num = rng.pick(pool.lo, pool.hi);
    long den = pool.halves && rng.chance(1, 4) ? 2 : 1;
    return ExactScalar::rational(num, den);
}

ExactMatrix rnd_mat(Rng& rng, std::size_t r, std::size_t c, const Pool& pool) {
    ExactMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rnd_scalar(rng, pool);
    return m;
}

ExactMatrix rnd_invertible(Rng& rng, std::size_t n, const Pool& pool) {
    for (;;) {
        ExactMatrix m = rnd_mat(rng, n, n, pool);
        if (rank(m) == n) return m;
    }
}

ExactMatrix rnd_nilpotent(Rng& rng, std::size_t n, const Pool& pool) {
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng.chance(2, 3)) m.at(i, j) = rnd_scalar(rng, pool);
    return m;
}

// Product of a few elementary integer operations: det +-1, exact integer
// inverse, so the similarity scramble keeps entries rational and bounded.
ExactMatrix rnd_unimodular(Rng& rng, std::size_t n) {
    ExactMatrix s = ExactMatrix::identity(n);
    if (n < 2) return s;
    const long ops = 2 * static_cast<long>(n);
    for (long t = 0; t < ops; ++t) {
        std::size_t i = static_cast<std::size_t>(rng.pick(0, static_cast<long>(n - 1)));
        std::size_t j = static_cast<std::size_t>(rng.pick(0, static_cast<long>(n - 1)));
        switch (rng.pick(0, 2)) {
            case 0: // shear
                if (i != j) {
                    ExactScalar c(rng.pick(-2, 2));
                    for (std::size_t k = 0; k < n; ++k) s.at(i, k) += c * s.at(j, k);
                }
                break;
            case 1: // swap
                if (i != j)
                    for (std::size_t k = 0; k < n; ++k) std::swap(s.at(i, k), s.at(j, k));
                break;
            default: // negate
                for (std::size_t k = 0; k < n; ++k) s.at(i, k) = -s.at(i, k);
                break;
        }
    }
    return s;
}

// mats <- S mats S^-1 entrywise
void scramble_all(Rng& rng, std::vector<ExactMatrix>& mats, std::size_t n) {
    ExactMatrix s = rnd_unimodular(rng, n);
    ExactMatrix si = inverse(s);
    for (ExactMatrix& m : mats) m = s * m * si;
}

// random matrix whose rows lie in the row span of L (possibly 0 rows)
ExactMatrix row_combo(Rng& rng, std::size_t rows, const ExactMatrix& L, const Pool& pool) {
    return rnd_mat(rng, rows, L.rows(), pool) * L;
}

// random matrix whose columns lie in the column span of K
ExactMatrix col_combo(Rng& rng, const ExactMatrix& K, std::size_t cols, const Pool& pool) {
    return K * rnd_mat(rng, K.cols(), cols, pool);
}

struct AdaptedB {
    std::size_t r = 0; // invertible core size
    ExactMatrix b1;    // r x r invertible
    ExactMatrix b2;    // (n-r) x (n-r) nilpotent
    ExactMatrix whole;
};

AdaptedB adapted_b(Rng& rng, std::size_t n, const Pool& pool) {
    AdaptedB out;
    // bias toward a nonzero nilpotent part (b^pi != 0)
    out.r = n >= 1 && rng.chance(3, 4) ? static_cast<std::size_t>(rng.pick(0, static_cast<long>(n - 1)))
                                       : n;
    out.b1 = rnd_invertible(rng, out.r, pool);
    out.b2 = rnd_nilpotent(rng, n - out.r, pool);
    out.whole = diag2(out.b1, out.b2);
    return out;
}

ExactMatrix assemble_a(const ExactMatrix& a11, const ExactMatrix& a12, const ExactMatrix& a21,
                       const ExactMatrix& a22) {
    return block2x2(a11, a12, a21, a22);
}

// a22 commuting with b2: a low-degree polynomial in b2
ExactMatrix poly_in(Rng& rng, const ExactMatrix& b2, const Pool& pool) {
    std::size_t k = b2.rows();
    ExactMatrix acc = ExactMatrix::zeros(k, k);
    ExactMatrix pw = ExactMatrix::identity(k);
    for (int deg = 0; deg <= 2; ++deg) {
        acc = acc + rnd_scalar(rng, pool) * pw;
        pw = pw * b2;
    }
    return acc;
}

// ---- pair recipes ----------------------------------------------------------

Instance gen_h22_like(Rng& rng, HypothesisId id, std::size_t n, const Pool& pool) {
    AdaptedB b = adapted_b(rng, n, pool);
    std::size_t r = b.r, k = n - r;
    ExactMatrix a11 = rnd_mat(rng, r, r, pool);
    ExactMatrix a12 = rnd_mat(rng, r, k, pool);
    ExactMatrix a21 = ExactMatrix::zeros(k, r); // kills b^pi a b^d
    ExactMatrix a22;
    std::string recipe;

    switch (id) {
        case HypothesisId::H22:
            a22 = rnd_mat(rng, k, k, pool);
            recipe = "H22/adapted";
            break;
        case HypothesisId::H23: {
            // a b b^pi = b^pi b a needs a12 b2 = 0 and [a22, b2] = 0
            a12 = row_combo(rng, r, left_null_basis(b.b2), pool);
            a22 = poly_in(rng, b.b2, pool);
            recipe = "H23/adapted";
            break;
        }
        case HypothesisId::H24:
            a22 = poly_in(rng, b.b2, pool);
            recipe = "H24/adapted";
            break;
        case HypothesisId::H28: {
            // a22 b2 = 0 via the left nullspace of b2
            ExactMatrix L = left_null_basis(b.b2);
            a22 = rnd_mat(rng, k, L.rows(), pool) * L;
            recipe = "H28/adapted";
            break;
        }
        default:
            throw Error("gen_h22_like: unexpected id");
    }
    return {{assemble_a(a11, a12, a21, a22), b.whole}, recipe};
}

Instance gen_h25(Rng& rng, std::size_t n, const Pool& pool) {
    AdaptedB b = adapted_b(rng, n, pool);
    std::size_t r = b.r, k = n - r;

    // nested split of the nilpotent side: a22 = diag(c, m), b2 = [[0,0],[x,y]]
    std::size_t r2 = k == 0 ? 0 : static_cast<std::size_t>(rng.pick(0, static_cast<long>(k)));
    std::size_t k2 = k - r2;
    ExactMatrix c = rnd_invertible(rng, r2, pool);
    ExactMatrix y = rnd_nilpotent(rng, k2, pool);
    ExactMatrix m(k2, k2);
    if (k2 > 0 && rng.chance(1, 2)) {
        // rank-one nilpotent annihilating y: m = w l with l y = 0, l w = 0
        ExactMatrix L = left_null_basis(y);
        if (L.rows() > 0) {
            ExactMatrix l = rnd_mat(rng, 1, L.rows(), pool) * L;
            ExactMatrix W = right_null_basis(l);
            if (W.cols() > 0) {
                ExactMatrix w = W * rnd_mat(rng, W.cols(), 1, pool);
                m = w * l;
            }
        }
    }
    ExactMatrix x = rnd_mat(rng, k2, r2, pool);
    ExactMatrix b2 = block2x2(ExactMatrix::zeros(r2, r2), ExactMatrix::zeros(r2, k2), x, y);
    ExactMatrix a22 = diag2(c, m);
    ExactMatrix bm = diag2(b.b1, b2);

    ExactMatrix a = assemble_a(rnd_mat(rng, r, r, pool), rnd_mat(rng, r, k, pool),
                               ExactMatrix::zeros(k, r), a22);
    return {{a, bm}, "H25/nested-adapted"};
}

// rank <= 2 factor annihilating targets: rows of X in the left null space
// of `right_kill`, columns of V in the right null space of X * mid.
ExactMatrix sandwiched_annihilator(Rng& rng, std::size_t n, const ExactMatrix& right_kill,
                                   const ExactMatrix& mid, const Pool& pool) {
    ExactMatrix L = left_null_basis(right_kill);
    if (L.rows() == 0) return ExactMatrix::zeros(n, n);
    std::size_t t = static_cast<std::size_t>(
        rng.pick(1, std::min<long>(2, static_cast<long>(L.rows()))));
    ExactMatrix X = rnd_mat(rng, t, L.rows(), pool) * L;
    ExactMatrix W = right_null_basis(X * mid);
    if (W.cols() == 0) return ExactMatrix::zeros(n, n);
    ExactMatrix V = W * rnd_mat(rng, W.cols(), t, pool);
    return V * X;
}

Instance gen_h26(Rng& rng, std::size_t n, const Pool& pool) {
    AdaptedB b = adapted_b(rng, n, pool);
    std::size_t r = b.r, k = n - r;
    // a22 b2^2 = 0 and a22 b2 a22 = 0
    ExactMatrix a22 = sandwiched_annihilator(rng, k, b.b2 * b.b2, b.b2, pool);
    ExactMatrix a = assemble_a(rnd_mat(rng, r, r, pool), rnd_mat(rng, r, k, pool),
                               ExactMatrix::zeros(k, r), a22);
    return {{a, b.whole}, "H26/adapted"};
}

Instance gen_h27(Rng& rng, std::size_t n, const Pool& pool) {
    AdaptedB b = adapted_b(rng, n, pool);
    // a b^2 = 0 and a b a = 0 via a sandwiched annihilator on the whole of b;
    // redraw a couple of times if the sandwich collapses to zero
    ExactMatrix a = sandwiched_annihilator(rng, n, b.whole * b.whole, b.whole, pool);
    for (int retry = 0; retry < 2 && a.is_zero(); ++retry)
        a = sandwiched_annihilator(rng, n, b.whole * b.whole, b.whole, pool);
    if (rng.chance(1, 16)) a = ExactMatrix::zeros(n, n);
    return {{a, b.whole}, "H27/annihilator"};
}

Instance gen_h31_h33_h35(Rng& rng, HypothesisId id, std::size_t n, const Pool& pool) {
    const std::string base = hypothesis_name(id);
    int family = rng.pick(0, 2);
    if (family == 2 && (id == HypothesisId::H35 || n < 2)) family = rng.pick(0, 1);
    if (family == 1 && n < 2) family = 0;

    if (family == 0) {
        // a b = 0: every condition collapses
        AdaptedB b = adapted_b(rng, n, pool);
        std::size_t r = b.r, k = n - r;
        ExactMatrix L = left_null_basis(b.b2);
        ExactMatrix a12 = rnd_mat(rng, r, L.rows(), pool) * L;
        ExactMatrix a22 = rnd_mat(rng, k, L.rows(), pool) * L;
        ExactMatrix a = assemble_a(ExactMatrix::zeros(r, r), a12, ExactMatrix::zeros(k, r), a22);
        return {{a, b.whole}, base + "/ab-zero"};
    }
    if (family == 1) {
        // b^2 = 0 with a upper triangular and beta a22 = 0
        std::size_t n1 = static_cast<std::size_t>(rng.pick(1, static_cast<long>(n - 1)));
        std::size_t n2 = n - n1;
        ExactMatrix beta = rnd_mat(rng, n1, n2, pool);
        ExactMatrix bm = block2x2(ExactMatrix::zeros(n1, n1), beta, ExactMatrix::zeros(n2, n1),
                                  ExactMatrix::zeros(n2, n2));
        ExactMatrix K = right_null_basis(beta);
        ExactMatrix a22 = col_combo(rng, K, n2, pool);
        ExactMatrix a = assemble_a(rnd_mat(rng, n1, n1, pool), rnd_mat(rng, n1, n2, pool),
                                   ExactMatrix::zeros(n2, n1), a22);
        return {{a, bm}, base + "/b-square-zero"};
    }
    // family 2: ab with an invertible core, b nilpotent
    std::size_t r = static_cast<std::size_t>(rng.pick(1, static_cast<long>(n / 2)));
    std::size_t k = n - r;
    ExactMatrix g = rnd_invertible(rng, r, pool);
    ExactMatrix b21 = vcat(ExactMatrix::identity(r), ExactMatrix::zeros(k - r, r));
    ExactMatrix bm = block2x2(ExactMatrix::zeros(r, r), ExactMatrix::zeros(r, k), b21,
                              ExactMatrix::zeros(k, k));
    ExactMatrix a12 = hcat(g, rnd_mat(rng, r, k - r, pool));
    ExactMatrix a22 = hcat(ExactMatrix::zeros(k, r), rnd_mat(rng, k, k - r, pool));
    ExactMatrix a = assemble_a(rnd_mat(rng, r, r, pool), a12, ExactMatrix::zeros(k, r), a22);
    return {{a, bm}, base + "/core-product"};
}

Instance gen_pair(Rng& rng, HypothesisId id, std::size_t n, const Pool& pool) {
    switch (id) {
        case HypothesisId::H22:
        case HypothesisId::H23:
        case HypothesisId::H24:
        case HypothesisId::H28:
            return gen_h22_like(rng, id, n, pool);
        case HypothesisId::H25:
            return gen_h25(rng, n, pool);
        case HypothesisId::H26:
            return gen_h26(rng, n, pool);
        case HypothesisId::H27:
            return gen_h27(rng, n, pool);
        case HypothesisId::H31:
        case HypothesisId::H33:
        case HypothesisId::H35:
            return gen_h31_h33_h35(rng, id, n, pool);
        case HypothesisId::H32: {
            Instance primal = gen_h31_h33_h35(rng, HypothesisId::H31, n, pool);
            return {{primal.mats[1].transpose(), primal.mats[0].transpose()},
                    "H32/transposed-" + primal.recipe};
        }
        case HypothesisId::H34: {
            Instance primal = gen_h31_h33_h35(rng, HypothesisId::H33, n, pool);
            return {{primal.mats[1].transpose(), primal.mats[0].transpose()},
                    "H34/transposed-" + primal.recipe};
        }
        default:
            throw Error("gen_pair: unexpected id");
    }
}

// ---- block recipes ----------------------------------------------------------

// A with (BC)^pi A X = 0 for the given X ((1 - pi) column + left-null rows)
ExactMatrix constrained_a(Rng& rng, std::size_t n, const ExactMatrix& bc_pi, const ExactMatrix& x,
                          const Pool& pool) {
    ExactMatrix part1 = (ExactMatrix::identity(n) - bc_pi) * rnd_mat(rng, n, n, pool);
    ExactMatrix L = left_null_basis(x);
    ExactMatrix part2 = rnd_mat(rng, n, L.rows(), pool) * L;
    return part1 + part2;
}

Instance gen_h41_h42(Rng& rng, HypothesisId id, std::size_t n, const Pool& pool) {
    const std::string base = hypothesis_name(id);
    int family = rng.pick(0, 2);

    if (family == 2) {
        // B C = 0: the (BC)^pi conditions collapse, A roams free
        AdaptedB bb = adapted_b(rng, n, pool);
        ExactMatrix B = bb.whole;
        ExactMatrix C = col_combo(rng, right_null_basis(B), n, pool);
        ExactMatrix A = rnd_mat(rng, n, n, pool);
        ExactMatrix D;
        if (id == HypothesisId::H41) {
            ExactMatrix L = left_null_basis(C);
            D = rnd_mat(rng, n, L.rows(), pool) * L; // D C = 0
        } else {
            D = col_combo(rng, right_null_basis(B), n, pool); // B D = 0
        }
        return {{A, B, C, D}, base + "/bc-zero"};
    }

    ExactMatrix B = rnd_mat(rng, n, n, pool);
    ExactMatrix C, D;
    if (id == HypothesisId::H41) {
        if (family == 0) {
            // D singular, C aligned with its kernel: D C = 0
            AdaptedB dd = adapted_b(rng, n, pool);
            D = dd.whole;
            C = col_combo(rng, right_null_basis(D), n, pool);
        } else {
            D = ExactMatrix::zeros(n, n);
            C = rnd_mat(rng, n, n, pool);
        }
    } else { // H42
        if (family == 0) {
            // B D = 0 through the kernel of B
            AdaptedB bb = adapted_b(rng, n, pool);
            B = bb.whole;
            D = col_combo(rng, right_null_basis(B), n, pool);
            C = rnd_mat(rng, n, n, pool);
        } else {
            // D^2 = 0 block form; C aligned so that B D C = 0
            std::size_t n1 = n < 2 ? 0 : static_cast<std::size_t>(rng.pick(1, static_cast<long>(n - 1)));
            D = ExactMatrix::zeros(n, n);
            if (n1 > 0)
                D = block2x2(ExactMatrix::zeros(n1, n1), rnd_mat(rng, n1, n - n1, pool),
                             ExactMatrix::zeros(n - n1, n1), ExactMatrix::zeros(n - n1, n - n1));
            C = col_combo(rng, right_null_basis(B * D), n, pool);
        }
    }
    auto bc = drazin(B * C);
    ExactMatrix A = constrained_a(rng, n, bc.projector, B * C, pool);
    return {{A, B, C, D}, base + (family == 0 ? "/kernel-aligned" : "/d-structured")};
}

Instance gen_h43_h44(Rng& rng, HypothesisId id, std::size_t n, const Pool& pool) {
    const std::string base = hypothesis_name(id);
    if (rng.chance(1, 3)) {
        // B C = 0 family
        AdaptedB bb = adapted_b(rng, n, pool);
        ExactMatrix B = bb.whole;
        ExactMatrix C = col_combo(rng, right_null_basis(B), n, pool);
        ExactMatrix A = rnd_mat(rng, n, n, pool);
        ExactMatrix D;
        if (id == HypothesisId::H43) {
            ExactMatrix L = left_null_basis(C);
            D = rnd_mat(rng, n, L.rows(), pool) * L;
        } else {
            D = col_combo(rng, right_null_basis(B), n, pool);
        }
        return {{A, B, C, D}, base + "/bc-zero"};
    }

    // B C similar to diag(invertible, 0): its nilpotent part vanishes, so
    // only (BC)^pi A (BC)^d and the D-side conditions remain. B keeps a
    // nilpotent tail block so the kernel alignments below stay nontrivial.
    std::size_t r = rng.chance(3, 4) ? static_cast<std::size_t>(rng.pick(0, static_cast<long>(n - 1)))
                                     : n;
    ExactMatrix g = rnd_invertible(rng, r, pool);
    ExactMatrix s0 = rnd_unimodular(rng, n);
    ExactMatrix t = rnd_unimodular(rng, n);
    ExactMatrix binner = block2x2(ExactMatrix::identity(r), rnd_mat(rng, r, n - r, pool),
                                  ExactMatrix::zeros(n - r, r), rnd_nilpotent(rng, n - r, pool));
    ExactMatrix cinner = diag2(g, ExactMatrix::zeros(n - r, n - r));
    ExactMatrix B = s0 * binner * t;
    ExactMatrix C = inverse(t) * cinner * inverse(s0);

    auto bc = drazin(B * C);
    ExactMatrix A = constrained_a(rng, n, bc.projector, bc.inverse, pool);
    ExactMatrix D;
    if (id == HypothesisId::H43) {
        ExactMatrix L = left_null_basis(C);
        D = rnd_mat(rng, n, L.rows(), pool) * L; // D C = 0
    } else {
        D = col_combo(rng, right_null_basis(B), n, pool); // B D = 0
    }
    return {{A, B, C, D}, base + "/core-bc"};
}

Instance gen_h45_h46(Rng& rng, HypothesisId id, std::size_t n, const Pool& pool) {
    const std::string base = hypothesis_name(id);
    bool bc_zero = rng.chance(1, 2);

    ExactMatrix A, B, C;
    if (bc_zero) {
        AdaptedB bb = adapted_b(rng, n, pool);
        B = bb.whole;
        C = col_combo(rng, right_null_basis(B), n, pool);
        A = rnd_mat(rng, n, n, pool);
    } else {
        // singular-biased B keeps ker(B) available for the D alignment and
        // left-null(BC) nonempty for A
        AdaptedB bb = adapted_b(rng, n, pool);
        B = bb.whole;
        C = rnd_mat(rng, n, n, pool);
        ExactMatrix L = left_null_basis(B * C);
        A = rnd_mat(rng, n, L.rows(), pool) * L; // A B C = 0
    }

    ExactMatrix D;
    if (id == HypothesisId::H45) {
        // D in ker(AB) and ker(CB)
        ExactMatrix K = right_null_basis(vcat(A * B, C * B));
        D = col_combo(rng, K, n, pool);
    } else {
        D = col_combo(rng, right_null_basis(B), n, pool); // B D = 0
    }
    return {{A, B, C, D}, base + (bc_zero ? "/bc-zero" : "/abc-zero")};
}

Instance gen_blocks(Rng& rng, HypothesisId id, std::size_t n, const Pool& pool) {
    switch (id) {
        case HypothesisId::H41:
        case HypothesisId::H42:
            return gen_h41_h42(rng, id, n, pool);
        case HypothesisId::H43:
        case HypothesisId::H44:
            return gen_h43_h44(rng, id, n, pool);
        case HypothesisId::H45:
        case HypothesisId::H46:
            return gen_h45_h46(rng, id, n, pool);
        default:
            throw Error("gen_blocks: unexpected id");
    }
}

} // namespace

HypothesisReport check_instance(HypothesisId id, const Instance& inst,
                                const TolerancePolicy& pol) {
    if (inst.is_pair()) return check_hypothesis(id, inst.mats[0], inst.mats[1], pol);
    return check_hypothesis(id, inst.mats[0], inst.mats[1], inst.mats[2], inst.mats[3], pol);
}

Instance generate_instance(const GenConfig& cfg) {
    if (cfg.dim < 1) throw InfeasibleConfigError("core dimension must be at least 1");
    if (cfg.pool_min > cfg.pool_max) throw InfeasibleConfigError("empty entry pool");

    Rng rng(cfg.seed);
    Pool pool{cfg.pool_min, cfg.pool_max, cfg.half_denominators};
    Instance inst = hypothesis_is_pair(cfg.id) ? gen_pair(rng, cfg.id, cfg.dim, pool)
                                               : gen_blocks(rng, cfg.id, cfg.dim, pool);
    if (cfg.scramble) scramble_all(rng, inst.mats, cfg.dim);

    if (!check_instance(cfg.id, inst).satisfied)
        throw Error(std::string("generator bug: recipe ") + inst.recipe +
                    " violated " + hypothesis_name(cfg.id));
    return inst;
}

Instance make_ab_zero_pair(std::size_t dim, std::uint64_t seed) {
    if (dim < 1) throw InfeasibleConfigError("core dimension must be at least 1");
    Rng rng(seed ^ 0xab0ab0ull);
    Pool pool{-3, 3, true};
    AdaptedB b = adapted_b(rng, dim, pool);
    std::size_t r = b.r, k = dim - r;
    ExactMatrix L = left_null_basis(b.b2);
    ExactMatrix a12 = rnd_mat(rng, r, L.rows(), pool) * L;
    ExactMatrix a22 = rnd_mat(rng, k, L.rows(), pool) * L;
    Instance inst{{block2x2(ExactMatrix::zeros(r, r), a12, ExactMatrix::zeros(k, r), a22), b.whole},
                  "ab-zero"};
    scramble_all(rng, inst.mats, dim);
    if (!(inst.mats[0] * inst.mats[1]).is_zero()) throw Error("generator bug: ab != 0");
    return inst;
}

Instance perturb_to_violate(const Instance& inst, HypothesisId id, std::size_t which,
                            std::uint64_t seed) {
    if (which >= hypothesis_condition_count(id))
        throw InfeasibleConfigError("condition index out of range");
    const std::size_t n = inst.mats[0].rows();
    Rng rng(seed ^ 0x7e57ull);
    Pool pool{-2, 2, false};

    for (int attempt = 0; attempt < 240; ++attempt) {
        Instance cand = inst;
        std::size_t target = static_cast<std::size_t>(
            rng.pick(0, static_cast<long>(inst.mats.size() - 1)));
        ExactMatrix u = rnd_mat(rng, n, 1, pool);
        ExactMatrix v = rnd_mat(rng, 1, n, pool);
        cand.mats[target] = cand.mats[target] + u * v;

        HypothesisReport rep = check_instance(id, cand);
        bool only_chosen = !rep.conditions[which].zero;
        for (std::size_t i = 0; only_chosen && i < rep.conditions.size(); ++i)
            if (i != which && !rep.conditions[i].zero) only_chosen = false;
        if (only_chosen) {
            cand.recipe = inst.recipe + "/violated-" + std::to_string(which);
            return cand;
        }
    }
    throw CannotIsolateError(std::string(hypothesis_name(id)) + " condition " +
                             std::to_string(which) + " not isolable for this instance");
}

} // namespace gdz
