#pragma once

#include <json.hpp>

#include "bcflab/bcf.hpp"
#include "bcflab/polymatrix.hpp"
#include "bcflab/totalpos.hpp"

namespace bcflab::io {

using ordered_json = nlohmann::ordered_json;

// {"terms":[{"c":"<num>/<den>","e":{"<var>":<exp>,...}},...]}, terms in
// graded-lexicographic order on indeterminate names (leading term first),
// integers as "<num>/1".
ordered_json poly_to_json(const MPoly& p);
MPoly poly_from_json(const ordered_json& j);

// {"family":"S","m":2,"N":6,"rows":[[poly],[poly,poly],...]}
ordered_json triangle_to_json(const bcf::Triangle& t);

// {"rows":R,"cols":C,"entries":[[poly,...],...]}
ordered_json matrix_to_json(const PolyMatrix& m);

// {"verdict":"tp"|"violated","order":r,"checked":n,"witness":{...}?}
ordered_json tp_report_to_json(const totalpos::TPReport& rep);

}  // namespace bcflab::io
