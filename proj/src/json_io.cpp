#include "lensbound/json_io.hpp"

namespace lensbound {

ordered_json path_json(const FareyPath& path) {
    ordered_json arr = ordered_json::array();
    for (const Slope& s : path.vertices) arr.push_back(s.str());
    return arr;
}

ordered_json tight_structure_json(const TightStructure& t) {
    ordered_json j;
    j["p"] = std::to_string(t.lens.p);
    j["q"] = std::to_string(t.lens.q);
    j["path"] = path_json(t.path);
    j["signs"] = t.signs;
    ordered_json blocks = ordered_json::array();
    for (long long b : t.blocks) blocks.push_back(std::to_string(b));
    j["blocks"] = blocks;
    return j;
}

ordered_json verdict_json(const Verdict& v) {
    ordered_json j;
    j["answer"] = v.answer();
    ordered_json witnesses = ordered_json::array();
    for (const Witness& w : v.witnesses) {
        ordered_json wj;
        wj["label"] = w.label;
        ordered_json values;
        for (const auto& [name, value] : w.values) values[name] = std::to_string(value);
        wj["values"] = values;
        witnesses.push_back(wj);
    }
    j["witnesses"] = witnesses;
    ordered_json derivation = ordered_json::array();
    for (const DerivationStep& step : v.derivation) {
        ordered_json sj;
        sj["step"] = step.text;
        sj["ref"] = step.ref;
        derivation.push_back(sj);
    }
    j["derivation"] = derivation;
    j["bounds"] = v.bounds;
    return j;
}

ordered_json certificate_json(const Certificate& c) {
    ordered_json j;
    j["coefficient"] = c.coefficient.str();
    j["conclusion"] = to_string(c.conclusion);
    j["status"] = to_string(c.status);
    j["hypotheses"] = c.hypotheses;
    j["paper_ref"] = c.paper_ref;
    j["homology_check"] = c.homology_check;
    return j;
}

ordered_json group_json(const AbelianGroup& g) {
    ordered_json j;
    j["free_rank"] = std::to_string(g.free_rank);
    ordered_json factors = ordered_json::array();
    for (const Int& d : g.invariant_factors) factors.push_back(d.str());
    j["invariant_factors"] = factors;
    return j;
}

}  // namespace lensbound
