#include "gdz/routes.hpp"
#include "gdz/formulas.hpp"

namespace gdz {

const char* thm22_direction_name(Thm22Direction dir) {
    switch (dir) {
        case Thm22Direction::OneToTwo: return "1->2";
        case Thm22Direction::TwoToOne: return "2->1";
        case Thm22Direction::TwoToThree: return "2->3";
        case Thm22Direction::ThreeToTwo: return "3->2";
    }
    return "?";
}

const char* route_name(RouteId id) {
    switch (id) {
        case RouteId::L21: return "L2.1";
        case RouteId::T22: return "T2.2";
        case RouteId::C23: return "C2.3";
        case RouteId::C24: return "C2.4";
        case RouteId::C25: return "C2.5";
        case RouteId::T26: return "T2.6";
        case RouteId::C27: return "C2.7";
        case RouteId::C28: return "C2.8";
        case RouteId::T31: return "T3.1";
        case RouteId::C32: return "C3.2";
        case RouteId::T33: return "T3.3";
        case RouteId::C34: return "C3.4";
        case RouteId::C35: return "C3.5";
        case RouteId::T41: return "T4.1";
        case RouteId::C42: return "C4.2";
        case RouteId::T43: return "T4.3";
        case RouteId::C44: return "C4.4";
        case RouteId::T45: return "T4.5";
        case RouteId::C46: return "C4.6";
    }
    return "?";
}

std::optional<RouteId> route_from_name(const std::string& name) {
    for (RouteId id : kAllRoutes)
        if (name == route_name(id)) return id;
    return std::nullopt;
}

std::optional<HypothesisId> route_hypothesis(RouteId id) {
    switch (id) {
        case RouteId::L21: return std::nullopt;
        case RouteId::T22: return HypothesisId::H22;
        case RouteId::C23: return HypothesisId::H23;
        case RouteId::C24: return HypothesisId::H24;
        case RouteId::C25: return HypothesisId::H25;
        case RouteId::T26: return HypothesisId::H26;
        case RouteId::C27: return HypothesisId::H27;
        case RouteId::C28: return HypothesisId::H28;
        case RouteId::T31: return HypothesisId::H31;
        case RouteId::C32: return HypothesisId::H32;
        case RouteId::T33: return HypothesisId::H33;
        case RouteId::C34: return HypothesisId::H34;
        case RouteId::C35: return HypothesisId::H35;
        case RouteId::T41: return HypothesisId::H41;
        case RouteId::C42: return HypothesisId::H42;
        case RouteId::T43: return HypothesisId::H43;
        case RouteId::C44: return HypothesisId::H44;
        case RouteId::T45: return HypothesisId::H45;
        case RouteId::C46: return HypothesisId::H46;
    }
    return std::nullopt;
}

RouteId hypothesis_route(HypothesisId id) {
    switch (id) {
        case HypothesisId::H22: return RouteId::T22;
        case HypothesisId::H23: return RouteId::C23;
        case HypothesisId::H24: return RouteId::C24;
        case HypothesisId::H25: return RouteId::C25;
        case HypothesisId::H26: return RouteId::T26;
        case HypothesisId::H27: return RouteId::C27;
        case HypothesisId::H28: return RouteId::C28;
        case HypothesisId::H31: return RouteId::T31;
        case HypothesisId::H32: return RouteId::C32;
        case HypothesisId::H33: return RouteId::T33;
        case HypothesisId::H34: return RouteId::C34;
        case HypothesisId::H35: return RouteId::C35;
        case HypothesisId::H41: return RouteId::T41;
        case HypothesisId::H42: return RouteId::C42;
        case HypothesisId::H43: return RouteId::T43;
        case HypothesisId::H44: return RouteId::C44;
        case HypothesisId::H45: return RouteId::T45;
        case HypothesisId::H46: return RouteId::C46;
    }
    return RouteId::T22;
}

RouteArity route_arity(RouteId id) {
    switch (id) {
        case RouteId::T41:
        case RouteId::C42:
        case RouteId::T43:
        case RouteId::C44:
        case RouteId::T45:
        case RouteId::C46:
            return RouteArity::Blocks;
        default:
            return RouteArity::Pair;
    }
}

} // namespace gdz
