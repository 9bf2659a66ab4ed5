#include "gdz/hypotheses.hpp"

namespace gdz {

const char* hypothesis_name(HypothesisId id) {
    switch (id) {
        case HypothesisId::H22: return "H22";
        case HypothesisId::H23: return "H23";
        case HypothesisId::H24: return "H24";
        case HypothesisId::H25: return "H25";
        case HypothesisId::H26: return "H26";
        case HypothesisId::H27: return "H27";
        case HypothesisId::H28: return "H28";
        case HypothesisId::H31: return "H31";
        case HypothesisId::H32: return "H32";
        case HypothesisId::H33: return "H33";
        case HypothesisId::H34: return "H34";
        case HypothesisId::H35: return "H35";
        case HypothesisId::H41: return "H41";
        case HypothesisId::H42: return "H42";
        case HypothesisId::H43: return "H43";
        case HypothesisId::H44: return "H44";
        case HypothesisId::H45: return "H45";
        case HypothesisId::H46: return "H46";
    }
    return "?";
}

std::optional<HypothesisId> hypothesis_from_name(const std::string& name) {
    for (HypothesisId id : kAllHypotheses)
        if (name == hypothesis_name(id)) return id;
    return std::nullopt;
}

bool hypothesis_is_pair(HypothesisId id) {
    switch (id) {
        case HypothesisId::H41:
        case HypothesisId::H42:
        case HypothesisId::H43:
        case HypothesisId::H44:
        case HypothesisId::H45:
        case HypothesisId::H46:
            return false;
        default:
            return true;
    }
}

std::size_t hypothesis_condition_count(HypothesisId id) {
    switch (id) {
        case HypothesisId::H22:
        case HypothesisId::H28:
            return 1;
        case HypothesisId::H23:
        case HypothesisId::H24:
        case HypothesisId::H26:
        case HypothesisId::H27:
        case HypothesisId::H33:
        case HypothesisId::H34:
        case HypothesisId::H35:
            return 2;
        case HypothesisId::H25:
        case HypothesisId::H31:
        case HypothesisId::H32:
            return 3;
        case HypothesisId::H41:
        case HypothesisId::H42:
        case HypothesisId::H45:
        case HypothesisId::H46:
            return 4;
        case HypothesisId::H43:
        case HypothesisId::H44:
            return 5;
    }
    return 0;
}

} // namespace gdz
