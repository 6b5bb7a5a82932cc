#include "obstrukt/json_io.hpp"

#include <limits>
#include <utility>

#include "obstrukt/word_syntax.hpp"

namespace obstrukt {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw JsonFormatError("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw JsonFormatError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::int64_t int_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw JsonFormatError(std::string("field \"") + name + "\" must be an integer");
  return v.get<std::int64_t>();
}

int arc_field(const Json& j, const char* name) {
  const auto u = int_field(j, name);
  if (u != 1 && u != 2) throw JsonFormatError(std::string("field \"") + name + "\" must be 1 or 2");
  return static_cast<int>(u);
}

Integer parse_coefficient(const Json& c) {
  if (c.is_number_integer()) return Integer(std::to_string(c.get<std::int64_t>()));
  if (!c.is_string()) throw JsonFormatError("coefficient must be a decimal string");
  const auto& s = c.get_ref<const std::string&>();
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start) throw JsonFormatError("empty coefficient");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw JsonFormatError("coefficient \"" + s + "\" is not decimal");
  return Integer(s, 10);
}

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

}  // namespace

Json to_json(const GroupElement& g) {
  return Json::array({g[0], g[1], g[2], g[3]});
}

Json to_json(const AugVector& a) {
  Json out = Json::array();
  for (const auto& x : a.v) out.push_back(integer_json(x));
  return out;
}

Json to_json(const RingElement& x) {
  Json terms = Json::array();
  for (const auto& t : x.terms()) terms.push_back(Json{{"exp", to_json(t.elem)}, {"coef", t.coef.get_str()}});
  return Json{{"terms", std::move(terms)}};
}

Json to_json(const ObstructionClass& c) {
  Json stab = Json::array();
  for (const auto& p : c.stab()) stab.push_back(Json{{"s", to_json(p.s)}, {"t", to_json(p.t)}});
  return Json{{"d", to_json(c.d())}, {"g", to_json(c.g())}, {"r", to_json(c.r())}, {"stab", std::move(stab)}};
}

Json to_json(const Move& m) {
  return std::visit(
      overloaded{
          [](const XiSpin& x) { return Json{{"kind", "xi"}, {"u", x.u}}; },
          [](const EtaSpin& x) {
            return Json{{"kind", "eta"},
                        {"u", x.u},
                        {"lambda_plus", to_json(x.lambda_plus)},
                        {"lambda_minus", to_json(x.lambda_minus)}};
          },
          [](const RhoSpin& x) {
            return Json{{"kind", "rho"},
                        {"u", x.u},
                        {"gamma_plus", to_json(x.gamma_plus)},
                        {"gamma_minus", to_json(x.gamma_minus)}};
          },
          [](const TauSpin& x) {
            return Json{{"kind", "tau"}, {"u", x.u}, {"v", x.v}, {"base", to_json(x.base)}};
          },
          [](const BasepointLoop& x) {
            return Json{{"kind", "theta"}, {"theta_bar", to_json(x.theta_bar)}};
          },
          [](const DeltaSpin& x) {
            return Json{{"kind", "delta"},
                        {"k", x.k},
                        {"side", x.side},
                        {"mu_plus", to_json(x.mu_plus)},
                        {"mu_minus", to_json(x.mu_minus)}};
          },
      },
      m);
}

Json to_json(const MoveWord& w) {
  Json out = Json::array();
  for (const auto& m : w) out.push_back(to_json(m));
  return out;
}

Json to_json(const Verdict& v) {
  return Json{{"nonvanishing", v.nonvanishing},
              {"psi", to_json(v.psi_value)},
              {"witness",
               Json{{"sigma1", to_json(v.witness.sigma1.sigma())},
                    {"sigma2", to_json(v.witness.sigma2.sigma())},
                    {"word_length", v.witness.word_length},
                    {"word_digest", v.witness.word_digest}}}};
}

Json to_json(const J2Decomposition& terms) {
  Json out = Json::array();
  for (const auto& t : terms)
    out.push_back(Json{{"coef", t.coef.get_str()}, {"h", to_json(t.h)}, {"p", to_json(t.p)}, {"q", to_json(t.q)}});
  return out;
}

Json to_json(const InvarianceReport& report) {
  Json failures = Json::array();
  for (const auto& f : report.failures)
    failures.push_back(Json{{"move", format_move(f.move)},
                            {"sigma", to_json(f.sigma.sigma())},
                            {"reason", f.reason}});
  return Json{{"moves_checked", report.moves_checked},
              {"failure_count", report.failures.size()},
              {"failures", std::move(failures)}};
}

Json to_json(const SearchReport& report) {
  Json words = Json::array();
  for (const auto& w : report.vanishing_words) words.push_back(format_word(w));
  return Json{{"sigma1", to_json(report.sigma1.sigma())},
              {"sigma2", to_json(report.sigma2.sigma())},
              {"max_word_len", report.max_word_len},
              {"box", report.box},
              {"moves_enumerated", report.moves_enumerated},
              {"alphabet_size", report.alphabet_size},
              {"evaluations", report.evaluations},
              {"words_covered", report.words_covered},
              {"vanishing_count", report.vanishing_count},
              {"vanishing_words", std::move(words)}};
}

Json to_json(const CertificateRecord& record) {
  return Json{{"sigma1", to_json(record.sigma1.sigma())},
              {"sigma2", to_json(record.sigma2.sigma())},
              {"psi", to_json(record.psi)},
              {"words_checked", record.words_checked},
              {"vanishing_found", record.vanishing_found}};
}

GroupElement group_element_from_json(const Json& j) {
  if (!j.is_array() || j.size() != kRank) throw JsonFormatError("group element must be an array of 4 integers");
  GroupElement::Exponents exps{};
  for (std::size_t i = 0; i < kRank; ++i) {
    if (!j[i].is_number_integer()) throw JsonFormatError("group element exponents must be integers");
    if (j[i].is_number_unsigned() &&
        j[i].get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
      throw JsonFormatError("group element exponent out of range");
    exps[i] = j[i].get<std::int64_t>();
  }
  return GroupElement(exps);
}

RingElement ring_from_json(const Json& j) {
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) throw JsonFormatError("\"terms\" must be an array");
  std::vector<Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back({group_element_from_json(field(t, "exp")), parse_coefficient(field(t, "coef"))});
  return RingElement(std::move(out));
}

ObstructionClass obstruction_from_json(const Json& j) {
  std::vector<StabPair> stab;
  if (auto it = j.find("stab"); it != j.end()) {
    if (!it->is_array()) throw JsonFormatError("\"stab\" must be an array");
    for (const auto& p : *it) stab.push_back({ring_from_json(field(p, "s")), ring_from_json(field(p, "t"))});
  }
  return {ring_from_json(field(j, "d")), ring_from_json(field(j, "g")), ring_from_json(field(j, "r")),
          std::move(stab)};
}

Move move_from_json(const Json& j) {
  const Json& kind_json = field(j, "kind");
  if (!kind_json.is_string()) throw JsonFormatError("\"kind\" must be a string");
  const auto& kind = kind_json.get_ref<const std::string&>();
  auto elem = [&j](const char* name) { return group_element_from_json(field(j, name)); };
  if (kind == "xi") return XiSpin{arc_field(j, "u")};
  if (kind == "eta") return EtaSpin{arc_field(j, "u"), elem("lambda_plus"), elem("lambda_minus")};
  if (kind == "rho") return RhoSpin{arc_field(j, "u"), elem("gamma_plus"), elem("gamma_minus")};
  if (kind == "tau") {
    const int u = arc_field(j, "u");
    const int v = arc_field(j, "v");
    if (j.contains("base")) return TauSpin{u, v, elem("base")};
    try {
      return TauSpin::from_quadruple(u, v, elem("g_pp"), elem("g_pm"), elem("g_mp"), elem("g_mm"));
    } catch (const std::invalid_argument& ex) {
      if (dynamic_cast<const JsonFormatError*>(&ex)) throw;
      throw JsonFormatError(ex.what());
    }
  }
  if (kind == "theta") return BasepointLoop{elem("theta_bar")};
  if (kind == "delta") {
    const auto k = int_field(j, "k");
    if (k < 0) throw JsonFormatError("stabilization index must be non-negative");
    return DeltaSpin{k, arc_field(j, "side"), elem("mu_plus"), elem("mu_minus")};
  }
  throw JsonFormatError("unknown move kind \"" + kind + "\"");
}

std::string certificate_bundle(const CertifyReport& report) {
  std::string out;
  for (const auto& r : report.records) {
    out += to_json(r).dump();
    out += '\n';
  }
  return out;
}

}  // namespace obstrukt
