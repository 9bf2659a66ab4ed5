#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gdz/drazin.hpp"

namespace gdz {

/// Condition sets gating the representation routes. Pair ids take (a, b),
/// block ids take (A, B, C, D).
///
/// Existence-style premises of the source condition sets (such as H22's
/// "b^pi a is Drazin invertible") hold automatically for complex matrices
/// and are therefore not checkable conditions here.
enum class HypothesisId {
    H22, H23, H24, H25, H26, H27, H28,
    H31, H32, H33, H34, H35,
    H41, H42, H43, H44, H45, H46,
};

inline constexpr HypothesisId kAllHypotheses[] = {
    HypothesisId::H22, HypothesisId::H23, HypothesisId::H24, HypothesisId::H25,
    HypothesisId::H26, HypothesisId::H27, HypothesisId::H28, HypothesisId::H31,
    HypothesisId::H32, HypothesisId::H33, HypothesisId::H34, HypothesisId::H35,
    HypothesisId::H41, HypothesisId::H42, HypothesisId::H43, HypothesisId::H44,
    HypothesisId::H45, HypothesisId::H46,
};

const char* hypothesis_name(HypothesisId id);
std::optional<HypothesisId> hypothesis_from_name(const std::string& name);

/// True when the id constrains a pair (a, b); false for the 4-block ids.
bool hypothesis_is_pair(HypothesisId id);

std::size_t hypothesis_condition_count(HypothesisId id);

struct ConditionResult {
    std::string label;   // condition as written, e.g. "b^π a b^d = 0"
    double residual = 0; // max absolute entry of the condition expression
    bool zero = false;   // exact backend: structurally zero; float: within policy
};

struct HypothesisReport {
    HypothesisId id = HypothesisId::H22;
    std::vector<ConditionResult> conditions;
    bool satisfied = false;

    double max_residual() const {
        double m = 0;
        for (const auto& c : conditions) m = std::max(m, c.residual);
        return m;
    }
    /// Indices of violated conditions, in stated order.
    std::vector<std::size_t> violated() const {
        std::vector<std::size_t> out;
        for (std::size_t i = 0; i < conditions.size(); ++i)
            if (!conditions[i].zero) out.push_back(i);
        return out;
    }
};

/// A gated route refused to run; carries the failing report.
struct HypothesisError : Error {
    HypothesisReport report;
    explicit HypothesisError(HypothesisReport rep)
        : Error(std::string("hypothesis ") + hypothesis_name(rep.id) + " violated"),
          report(std::move(rep)) {}
};

namespace detail {

template <class S>
void push_condition(HypothesisReport& rep, std::string label, const Matrix<S>& expr,
                    const TolerancePolicy& pol) {
    ConditionResult c;
    c.label = std::move(label);
    c.residual = expr.max_abs();
    c.zero = is_zero_within(expr, pol);
    rep.conditions.push_back(std::move(c));
}

inline void finish_report(HypothesisReport& rep) {
    rep.satisfied = true;
    for (const auto& c : rep.conditions) rep.satisfied = rep.satisfied && c.zero;
}

} // namespace detail

/// Evaluate a pair condition set. Auxiliary Drazin data (b^d, (ab)^d, ...)
/// always comes from the oracle so the predicate stays independent of the
/// representation routes it gates.
template <class S>
HypothesisReport check_hypothesis(HypothesisId id, const Matrix<S>& a, const Matrix<S>& b,
                                  const TolerancePolicy& pol = {}) {
    if (!hypothesis_is_pair(id))
        throw DimensionError(std::string(hypothesis_name(id)) + " takes four blocks");
    if (!a.square() || !b.square() || a.rows() != b.rows())
        throw DimensionError("pair must be square of equal size");

    using detail::push_condition;
    HypothesisReport rep;
    rep.id = id;

    auto bdz = [&] { return drazin(b, pol); };
    auto abdz = [&] { return drazin(a * b, pol); };

    switch (id) {
        case HypothesisId::H22: {
            auto bd = bdz();
            push_condition(rep, "b^π a b^d = 0", bd.projector * a * bd.inverse, pol);
            break;
        }
        case HypothesisId::H23: {
            auto bd = bdz();
            push_condition(rep, "b^π a b^d = 0", bd.projector * a * bd.inverse, pol);
            push_condition(rep, "a b b^π = b^π b a",
                           a * b * bd.projector - bd.projector * b * a, pol);
            break;
        }
        case HypothesisId::H24: {
            auto bd = bdz();
            push_condition(rep, "b^π a b^d = 0", bd.projector * a * bd.inverse, pol);
            push_condition(rep, "b^π a b = b^π b a",
                           bd.projector * a * b - bd.projector * b * a, pol);
            break;
        }
        case HypothesisId::H25: {
            auto bd = bdz();
            Matrix<S> s = bd.projector * a;
            auto sdz = drazin(s, pol);
            push_condition(rep, "b^π a b^d = 0", bd.projector * a * bd.inverse, pol);
            push_condition(rep, "(b^π a)^d b^π a b = 0", sdz.inverse * bd.projector * a * b, pol);
            push_condition(rep, "b^π a b (b^π a)^π = 0", bd.projector * a * b * sdz.projector, pol);
            break;
        }
        case HypothesisId::H26: {
            auto bd = bdz();
            push_condition(rep, "b^π a b^2 = 0", bd.projector * a * b * b, pol);
            push_condition(rep, "b^π a b a = 0", bd.projector * a * b * a, pol);
            break;
        }
        case HypothesisId::H27: {
            push_condition(rep, "a b^2 = 0", a * b * b, pol);
            push_condition(rep, "a b a = 0", a * b * a, pol);
            break;
        }
        case HypothesisId::H28: {
            auto bd = bdz();
            push_condition(rep, "b^π a b = 0", bd.projector * a * b, pol);
            break;
        }
        case HypothesisId::H31: {
            auto ab = abdz();
            push_condition(rep, "a b^2 = 0", a * b * b, pol);
            push_condition(rep, "(ab)^π a (ab)^d = 0", ab.projector * a * ab.inverse, pol);
            push_condition(rep, "(ab)^π a b a = 0", ab.projector * a * b * a, pol);
            break;
        }
        case HypothesisId::H32: {
            auto ab = abdz();
            push_condition(rep, "a^2 b = 0", a * a * b, pol);
            push_condition(rep, "(ab)^d b (ab)^π = 0", ab.inverse * b * ab.projector, pol);
            push_condition(rep, "b a b (ab)^π = 0", b * a * b * ab.projector, pol);
            break;
        }
        case HypothesisId::H33: {
            auto ab = abdz();
            push_condition(rep, "a b^2 = 0", a * b * b, pol);
            push_condition(rep, "(ab)^π a^2 b a = 0", ab.projector * a * a * b * a, pol);
            break;
        }
        case HypothesisId::H34: {
            auto ab = abdz();
            push_condition(rep, "a^2 b = 0", a * a * b, pol);
            push_condition(rep, "b a b^2 (ab)^π = 0", b * a * b * b * ab.projector, pol);
            break;
        }
        case HypothesisId::H35: {
            push_condition(rep, "a b^2 = 0", a * b * b, pol);
            push_condition(rep, "a^2 b a = 0", a * a * b * a, pol);
            break;
        }
        default:
            throw Error("unreachable hypothesis id");
    }
    detail::finish_report(rep);
    return rep;
}

/// Evaluate a 4-block condition set on M = [[A, B],[C, D]].
template <class S>
HypothesisReport check_hypothesis(HypothesisId id, const Matrix<S>& A, const Matrix<S>& B,
                                  const Matrix<S>& C, const Matrix<S>& D,
                                  const TolerancePolicy& pol = {}) {
    if (hypothesis_is_pair(id))
        throw DimensionError(std::string(hypothesis_name(id)) + " takes a pair");
    const std::size_t n = A.rows();
    for (const Matrix<S>* m : {&A, &B, &C, &D})
        if (!m->square() || m->rows() != n)
            throw DimensionError("blocks must be square of equal size");

    using detail::push_condition;
    HypothesisReport rep;
    rep.id = id;

    auto bc = drazin(B * C, pol);
    switch (id) {
        case HypothesisId::H41: {
            push_condition(rep, "(BC)^π A B C A = 0", bc.projector * A * B * C * A, pol);
            push_condition(rep, "(BC)^π A B C B = 0", bc.projector * A * B * C * B, pol);
            push_condition(rep, "D C A = 0", D * C * A, pol);
            push_condition(rep, "D C B = 0", D * C * B, pol);
            break;
        }
        case HypothesisId::H42: {
            push_condition(rep, "(BC)^π A B C A = 0", bc.projector * A * B * C * A, pol);
            push_condition(rep, "(BC)^π A B C B = 0", bc.projector * A * B * C * B, pol);
            push_condition(rep, "B D C = 0", B * D * C, pol);
            push_condition(rep, "B D^2 = 0", B * D * D, pol);
            break;
        }
        case HypothesisId::H43: {
            push_condition(rep, "(BC)^π A (BC)^d = 0", bc.projector * A * bc.inverse, pol);
            push_condition(rep, "(BC)^π B C A = 0", bc.projector * B * C * A, pol);
            push_condition(rep, "(BC)^π B C B = 0", bc.projector * B * C * B, pol);
            push_condition(rep, "D C A = 0", D * C * A, pol);
            push_condition(rep, "D C B = 0", D * C * B, pol);
            break;
        }
        case HypothesisId::H44: {
            push_condition(rep, "(BC)^π A (BC)^d = 0", bc.projector * A * bc.inverse, pol);
            push_condition(rep, "(BC)^π B C A = 0", bc.projector * B * C * A, pol);
            push_condition(rep, "(BC)^π B C B = 0", bc.projector * B * C * B, pol);
            push_condition(rep, "B D C = 0", B * D * C, pol);
            push_condition(rep, "B D^2 = 0", B * D * D, pol);
            break;
        }
        case HypothesisId::H45: {
            auto cb = drazin(C * B, pol);
            push_condition(rep, "(CB)^π C A B C = 0", cb.projector * C * A * B * C, pol);
            push_condition(rep, "A (BC)^π A B C = 0", A * bc.projector * A * B * C, pol);
            push_condition(rep, "A B D = 0", A * B * D, pol);
            push_condition(rep, "C B D = 0", C * B * D, pol);
            break;
        }
        case HypothesisId::H46: {
            auto cb = drazin(C * B, pol);
            push_condition(rep, "(CB)^π C A B C = 0", cb.projector * C * A * B * C, pol);
            push_condition(rep, "A (BC)^π A B C = 0", A * bc.projector * A * B * C, pol);
            push_condition(rep, "B D C = 0", B * D * C, pol);
            push_condition(rep, "B D^2 = 0", B * D * D, pol);
            break;
        }
        default:
            throw Error("unreachable hypothesis id");
    }
    detail::finish_report(rep);
    return rep;
}

} // namespace gdz
