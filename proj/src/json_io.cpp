#include "gamma_euler/json_io.hpp"

namespace gamma_euler {

nlohmann::json stratification_to_json(const Stratification& s) {
    nlohmann::json out;
    out["source"] = s.source;
    out["strata"] = nlohmann::json::array();
    for (const Stratum& st : s.strata) {
        nlohmann::json j;
        j["label"] = {{"kind", stratum_kind_tag(st.label.kind)},
                      {"I", st.label.index_set},
                      {"J", st.label.det_index_set}};
        j["chi"] = st.orbit_space_chi.str();
        j["isotropy"] = st.isotropy.tag();
        j["zeroed_by"] =
            st.zeroed_by ? nlohmann::json(zero_rule_tag(*st.zeroed_by))
                         : nlohmann::json(nullptr);
        j["empty"] = st.empty;
        out["strata"].push_back(std::move(j));
    }
    return out;
}

}  // namespace gamma_euler
