#pragma once

/**
 * JSON views of the core value types.  Key order is fixed (insertion
 * order), and every numeric value is rendered as an exact decimal
 * string, so emitted documents re-serialize byte-identically.
 */

#include <json.hpp>

#include "lensbound/filling.hpp"
#include "lensbound/homology.hpp"
#include "lensbound/surgery.hpp"
#include "lensbound/tight.hpp"

namespace lensbound {

using ordered_json = nlohmann::ordered_json;

ordered_json path_json(const FareyPath& path);
ordered_json tight_structure_json(const TightStructure& t);
ordered_json verdict_json(const Verdict& v);
ordered_json certificate_json(const Certificate& c);
ordered_json group_json(const AbelianGroup& g);

}  // namespace lensbound
