#ifndef MCRES_SERIALIZE_HPP
#define MCRES_SERIALIZE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mcres/chain_complex.hpp"
#include "mcres/cointerval.hpp"
#include "mcres/corpus.hpp"
#include "mcres/decomp_space.hpp"
#include "mcres/ek_geometry.hpp"
#include "mcres/verification.hpp"

namespace mcres {

using Json = nlohmann::ordered_json;

Json to_json(const Monomial& m);
Json to_json(const Symbol& s);
Json to_json(const OrderedIdeal& ideal);
Json to_json(const LabeledChainComplex& c);
Json to_json(const BettiTable& table);
Json to_json(const CWComplex& x);
Json to_json(const HomComplex& x);
Json to_json(const DecompositionRule& rule);
Json to_json(const CorpusItem& item);

/// One row per nonzero entry: i, the exponents of b, value.
std::string betti_csv(const BettiTable& table);

/// OFF mesh with one polygon per 2-cell. Exponent vectors are projected to
/// three coordinates by dropping constant coordinates and truncating; a
/// comment line records the kept coordinates.
std::string to_off(const FacePoset& poset, const std::vector<Monomial>& vertex_positions);
std::string to_off(const CWComplex& x);
std::string to_off(const HomComplex& x);

/// Short stable digest of a combinatorial type certificate.
std::string fingerprint(const std::string& certificate);

}  // namespace mcres

#endif
