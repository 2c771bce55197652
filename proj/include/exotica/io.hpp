#pragma once

#include <string>

#include <json.hpp>

#include "exotica/coefficients.hpp"
#include "exotica/posdef.hpp"
#include "exotica/reps.hpp"
#include "exotica/ring.hpp"
#include "exotica/seminorms.hpp"

namespace exotica {

using Json = nlohmann::ordered_json;

/// v rounded to 12 significant digits (the output precision everywhere).
double round12(double v);
/// "%.12g".
std::string format12(double v);

/// {"group": "F2", "terms": [{"elt": "abA", "re": "1/2", "im": "0"}]}
Json to_json(const GroupRingElement& x);
GroupRingElement ring_from_json(const Json& j);

/// Text form "a + A - 2*b + 1/2*ab + 3i*id": coefficient (rational, optionally
/// followed by i) times an element; "id" is the identity. Also "h" for the
/// generator sum.
GroupRingElement parse_ring_element(std::string_view text, const Group& group);
std::string ring_to_string(const GroupRingElement& x);

Json to_json(const LpCertificate& c);
Json to_json(const OkayasuTable& t);
Json to_json(const DpHaagerupReport& r);
Json to_json(const InducedIdentityReport& r);
Json to_json(const MarginalTrials& m);
Json to_json(const NormInterval& iv);
Json to_json(const DominanceReport& r);

/// {"group", "dim", "generators": [[[re, im], ...row-major...], ...]}
Json to_json(const ComplexRep& rep);
ComplexRep rep_from_json(const Json& j);

/// Variant tag plus payload: {"type": "Join", "children": [...]}.
Json to_json(const SeminormSpec& spec);
SeminormSpec spec_from_json(const Json& j);

/// Columns sample, a_lower, a_upper, b_lower, b_upper, verdict, gap.
std::string to_csv(const DominanceReport& r);

}  // namespace exotica
