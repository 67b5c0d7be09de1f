#ifndef OPFP_JSON_IO_HPP
#define OPFP_JSON_IO_HPP

#include <json.hpp>

#include "opfp/case_analysis.hpp"
#include "opfp/group_model.hpp"

namespace opfp {

using json = nlohmann::ordered_json;

// Rationals serialize as "p/q" or "n"; symbolic scalars as expression strings.
json scalar_json(const Scalar& s);
json diag_json(const DiagElement& b);
json matrix_json(const LinearMapD& m);
json partition_json(const NCPartition& p);
// Expanded monomial list [[coeff, {var: exponent, ...}], ...].
json polynomial_json(const Polynomial& p);
json family_json(const CumulantFamily& fam);
json group_element_json(const GroupAlgebraElement& x);

json check_report_json(const CheckReport& r);
json subcase_report_json(const SubcaseReport& r);
json coverage_report_json(const CoverageReport& r);
json lin_constraints_json(const LinConstraints& c);

// {"q": "1/2", "r": [["1/2","0"],["1/2","1"]]}; unknown keys rejected,
// entries must be nonnegative rationals with q in (0,1).
CircularParams params_from_json(const json& j);
CircularParams load_params_file(const std::string& path);

DiagElement diag_from_json(const json& j);

} // namespace opfp

#endif
