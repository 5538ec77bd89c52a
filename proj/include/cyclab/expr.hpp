#pragma once

#include <string>

#include "cyclab/delta.hpp"
#include "cyclab/lambda.hpp"
#include "cyclab/ordered_group.hpp"

namespace cyclab {

/* Morphism expressions: whitespace-separated generator tokens applied left to
   right, ended by the anchor `@<n>` naming the source object.  "d0 s1 @ 2"
   is the composite [2] -> [3] -> [2] applying the face d0 and then the
   degeneracy s1.  The anchor may be written `@2` or `@ 2`. */
DeltaMap parse_delta_expr(const std::string& text);

/* Same grammar plus the rotation tokens `t` and `t^k`. */
LambdaMap parse_lambda_expr(const std::string& text);

/* {"cat":"delta","source":n,"target":m,"values":[...]} */
std::string delta_morphism_to_json(const DeltaMap& f);
DeltaMap delta_morphism_from_json(const std::string& text);

/* {"cat":"lambda","source":n,"target":m,"values":[...]} with the canonical
   period as the value list. */
std::string lambda_morphism_to_json(const LambdaMap& f);
LambdaMap lambda_morphism_from_json(const std::string& text);

/* {"breakpoints":[["x","f(x)"],...]} with exact rational coordinates. */
std::string pl_to_json(const PLMap& f);
PLMap pl_from_json(const std::string& text);

}  // namespace cyclab
