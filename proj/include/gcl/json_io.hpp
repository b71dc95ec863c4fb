#pragma once

#include <json.hpp>

#include "gcl/catalog.hpp"
#include "gcl/graded_algebra.hpp"
#include "gcl/presentation.hpp"
#include "gcl/rays.hpp"
#include "gcl/s3.hpp"

namespace gcl {

using json = nlohmann::json;

json ray_to_json(const Ray& e);
Ray ray_from_json(const json& j);  // missing pairs are completed when determined

json ring_to_json(const Ring& r);
Ring ring_from_json(const json& j);

json algebra_to_json(const MGradedAlgebra& a);
MGradedAlgebra algebra_from_json(const json& j);

json s3_to_json(const S3CoverData& x);
S3CoverData s3_from_json(const json& j);
json triple_to_json(const TripleCoverData& t);
TripleCoverData triple_from_json(const json& j);

SurfaceNumbers surface_numbers_from_json(const json& j);
json surface_invariants_to_json(const SurfaceInvariants& s);

json hdata_to_json(const Group& g, const HData& d);
json presentation_to_json(const RMPresentation& p);
json witness_to_json(const Group& g, const ReducibilityWitness& w);
json sigma_to_json(const SigmaTuple& chi);
json qbar_invariants_to_json(const QbarInvariants& v);

}  // namespace gcl
