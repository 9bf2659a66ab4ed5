#pragma once

#include <optional>
#include <string>

#include "gdz/hypotheses.hpp"

namespace gdz {

/// Catalog of representation routes. Each route is bound to exactly one
/// hypothesis set; L2.1 is gated by the bare precondition ab = 0 instead.
enum class RouteId {
    L21,
    T22, C23, C24, C25, T26, C27, C28,
    T31, C32, T33, C34, C35,
    T41, C42, T43, C44, T45, C46,
};

inline constexpr RouteId kAllRoutes[] = {
    RouteId::L21, RouteId::T22, RouteId::C23, RouteId::C24, RouteId::C25,
    RouteId::T26, RouteId::C27, RouteId::C28, RouteId::T31, RouteId::C32,
    RouteId::T33, RouteId::C34, RouteId::C35, RouteId::T41, RouteId::C42,
    RouteId::T43, RouteId::C44, RouteId::T45, RouteId::C46,
};

const char* route_name(RouteId id);
std::optional<RouteId> route_from_name(const std::string& name);

/// The hypothesis set gating a route; empty only for L2.1.
std::optional<HypothesisId> route_hypothesis(RouteId id);

/// The route driven when exploring a hypothesis id.
RouteId hypothesis_route(HypothesisId id);

enum class RouteArity { Pair, Blocks };
RouteArity route_arity(RouteId id);

} // namespace gdz
