#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropmirror/amoeba/sampler.hpp"
#include "tropmirror/coordring/ring.hpp"
#include "tropmirror/floer/algebra.hpp"
#include "tropmirror/tropical/constants.hpp"
#include "tropmirror/tropical/hausdorff.hpp"

namespace tropmirror::cli {

using nlohmann::json;

// Shortest decimal that reads back to the same double.
std::string format_double(double x);

json to_json(const RationalVector& v);
json to_json(const LatticeVector& v);
json to_json(const Polytope& q);
json to_json(const tropical::CoherentSubdivision& s);
json to_json(const tropical::TropicalComplex& pi);
json to_json(const tropical::TropicalConstants& k);
json to_json(const tropical::HausdorffReport& r);
json to_json(const floer::GradedAlgebra& alg);
json to_json(const floer::AxiomReport& r);
json to_json(const coordring::IsomorphismReport& r);
json to_json(const coordring::SerreReport& r);
json to_json(const amoeba::AmoebaCloud& cloud);

// Writes text to path; throws MalformedInput when the file cannot be written.
void write_file(const std::string& path, const std::string& text);

}  // namespace tropmirror::cli
