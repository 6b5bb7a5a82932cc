#ifndef OBSTRUKT_JSON_IO_HPP
#define OBSTRUKT_JSON_IO_HPP

// JSON forms of ring elements, obstruction classes, moves and reports.
//
//   RingElement       {"terms":[{"exp":[a,b,c,d],"coef":"<decimal>"},...]}
//   ObstructionClass  {"d":R,"g":R,"r":R,"stab":[{"s":R,"t":R},...]}
//   Move              {"kind":"xi|eta|rho|tau|theta|delta", ...}
//   certificate line  {"sigma1":[...],"sigma2":[...],"psi":[...],
//                      "words_checked":N,"vanishing_found":false}
//
// Terms are emitted in canonical order, so dump(to_json(parse(s))) == s for
// canonical input.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "obstrukt/group_ring.hpp"
#include "obstrukt/moves.hpp"
#include "obstrukt/obstruction.hpp"
#include "obstrukt/verifier.hpp"

namespace obstrukt {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Json to_json(const GroupElement& g);
Json to_json(const AugVector& a);
Json to_json(const RingElement& x);
Json to_json(const ObstructionClass& c);
Json to_json(const Move& m);
Json to_json(const MoveWord& w);
Json to_json(const Verdict& v);
Json to_json(const J2Decomposition& terms);
Json to_json(const InvarianceReport& report);
Json to_json(const SearchReport& report);
Json to_json(const CertificateRecord& record);

// Parsers throw JsonFormatError on malformed input. ring_from_json accepts
// unsorted or duplicated terms and normalizes them.
GroupElement group_element_from_json(const Json& j);
RingElement ring_from_json(const Json& j);
ObstructionClass obstruction_from_json(const Json& j);
Move move_from_json(const Json& j);

// One JSON line per record, each terminated by '\n'.
std::string certificate_bundle(const CertifyReport& report);

}  // namespace obstrukt

#endif  // OBSTRUKT_JSON_IO_HPP
