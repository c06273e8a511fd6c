#pragma once

#include "estrada/double_star.hpp"
#include "estrada/enumeration.hpp"
#include "estrada/spectral.hpp"
#include "estrada/verify.hpp"

#include "json.hpp"

#include <string>

namespace estrada {

using json = nlohmann::ordered_json;

json to_json(const IdentityReport& r);
json to_json(const IdentitySweepReport& r);
json to_json(const SigmaSweepReport& r);
json to_json(const TreeRanking& r);
json to_json(const ExtremalReport& r);
json to_json(const DoubleStarOrderingReport& r);
json to_json(const MomentSequence& m);

/// Summary of one graph: order, size, both spectra, EE, LEE and M_0..M_K.
json compute_report(const Graph& g, int moment_order);

/// CSV rows n,a,b,x1,x2,x3,lee_closed_form,margin_to_next for every double
/// star with n in [n_min, n_max] (n_min >= 5). margin_to_next is empty for
/// a = floor(n/2).
std::string double_star_table_csv(int n_min, int n_max);

} // namespace estrada
