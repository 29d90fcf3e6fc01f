#pragma once

#include <string>

#include "vbcm/band.hpp"
#include "vbcm/chain.hpp"
#include "vbcm/cmmod.hpp"
#include "vbcm/cohom.hpp"
#include "vbcm/laurent.hpp"
#include "vbcm/third_party/json.hpp"
#include "vbcm/wild.hpp"

namespace vbcm {
namespace io {

/// Key order is preserved everywhere so that identical inputs produce
/// byte-identical output.
using Json = nlohmann::ordered_json;

// Laurent polynomials as [[exponent, "coefficient"], ...] with coefficients
// "p/q" over the rationals or decimal residues over F_p.
Json to_json(const laurent::LaurentPoly& p);
laurent::LaurentPoly poly_from_json(const Json& j, Field f);

Json to_json(const laurent::LaurentMatrix& m);
laurent::LaurentMatrix laurent_matrix_from_json(const Json& j, Field f);

// Constant matrices as {"rows", "cols", "entries": [["c", ...], ...]};
// entries may also be given in the Laurent list form (degree-0 only).
Json to_json(const Mat& m);
Mat mat_from_json(const Json& j, Field f);

Json to_json(const chain::ChainData& d);
chain::ChainData chain_from_json(const Json& j, Field f);

Json to_json(const chain::IntervalLineBundle& iv);

Json to_json(const band::BandDatum& b);
band::BandDatum band_from_json(const Json& j, Field f);

Json to_json(const band::GluingData& g);

Json to_json(const band::DualGraph& g);
band::DualGraph graph_from_json(const Json& j);

Json to_json(const cohom::CohomDims& c);

Json to_json(const cmmod::CMDescriptor& d);
Json to_json(const cmmod::QCuspDescriptor& d);

Json to_json(const wild::ModulePresentation& mp);
wild::ModulePresentation module_from_json(const Json& j, Field f);

Json to_json(const wild::Sigma2Module& m);
wild::Sigma2Module sigma2_from_json(const Json& j, Field f);

Json to_json(const wild::WitnessMatrixSet& w);

/// Parse helper that reports malformed documents as errc::invalid_argument.
Json parse(const std::string& text);

}  // namespace io
}  // namespace vbcm
