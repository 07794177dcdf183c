#pragma once

#include <span>
#include <string>
#include <utility>

#include "asymp/assoc_fn.hpp"
#include "asymp/indices.hpp"
#include "asymp/maergoiz.hpp"
#include "asymp/propagation.hpp"
#include "asymp/quasi.hpp"
#include "asymp/sequences.hpp"

namespace asymp {

// JSON renderers, one per report type.  Field names mirror the structs.
// Every floating value is rounded to 12 significant digits before it is
// embedded; nonfinite values (which JSON cannot carry as numbers) become the
// strings "inf" / "-inf" / "nan".  Output is pretty-printed with sorted keys,
// so identical reports serialize to identical bytes.
std::string to_json(const ConditionReport& rep);
std::string to_json(const IndexReport& rep);
std::string to_json(const ProximateOrderReport& rep);
std::string to_json(const AdmissibilityBand& band);
std::string to_json(const QuasiVerdict& verdict);
std::string to_json(const GrowthReport& rep);
std::string to_json(const HomogeneityReport& rep);
std::string to_json(const MvBounds& bounds);
std::string to_json(const FlatnessFit& fit);
std::string to_json(const PropagationTable& table);
std::string to_json(const TwoDirectionResult& res);
std::string to_json(const PlCheckResult& res);
std::string to_json(const ProofRecipe& recipe);
std::string to_json(const WasowDemo& demo);
std::string to_json(const ExpansionFit& fit);
std::string to_json(const ExtensionResult& res);

// CSV exports (12 significant digits, booleans as 1/0).
std::string regvar_to_csv(std::span<const RegvarRow> rows);
std::string propagation_rows_to_csv(const PropagationTable& table);

// Generic two-column table, e.g. ("t,g", band samples) or ("r,deviation",
// decay series).  The header must name exactly two columns.
std::string pairs_to_csv(const std::string& header,
                         std::span<const std::pair<double, double>> points);

}  // namespace asymp
