#ifndef MROOT_REPORT_HPP
#define MROOT_REPORT_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "certify.hpp"
#include "deflate.hpp"
#include "multiplicity.hpp"
#include "newton.hpp"
#include "numrank.hpp"
#include "poly.hpp"

namespace mroot {

using json = nlohmann::ordered_json;

json to_json(const cd& z);
json to_json(const std::vector<cd>& v);
json to_json(const Poly& p);  // terms sorted by (total degree, exponents)
json to_json(const SeriesSystem& s);
json to_json(const RankProfile& p);
json to_json(const SmallnessReport& r);
json to_json(const DeflationTrace& t);
json to_json(const NewtonRun& r);
json to_json(const Certificate& c);
json to_json(const SingularCertificate& c);
json to_json(const MultiplicityResult& m);

// Canonical serialized report: 2-space indent, '\n' terminated. Identical
// inputs produce byte-identical text.
std::string dump_report(const json& j);

}  // namespace mroot

#endif
