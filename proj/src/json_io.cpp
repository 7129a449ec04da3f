#include "bsp/json_io.hpp"

#include <cctype>
#include <sstream>

#include "bsp/words.hpp"

namespace bsp {

using nlohmann::json;

json pathToJson(const PathL& p) {
  json out;
  out["c"] = p.par.c;
  out["d"] = p.par.d;
  out["variant"] = p.par.negative ? "neg" : "pos";
  out["letters"] = p.letters;
  out["tail"] = toLong(p.tail);
  return out;
}

json formRToJson(const PathR& p) {
  json out;
  out["c"] = p.par.c;
  out["d"] = p.par.d;
  out["variant"] = p.par.negative ? "neg" : "pos";
  out["lead"] = toLong(p.lead);
  out["letters"] = p.letters;
  return out;
}

json joinResultToJson(const std::optional<PathL>& j) {
  json out;
  if (!j) {
    out["kind"] = "disjoint";
  } else {
    out["kind"] = "join";
    out["value"] = pathToJson(*j);
  }
  return out;
}

json seqToJson(const EPSeq& s) {
  json out;
  out["pre"] = s.pre;
  out["period"] = s.period;
  return out;
}

json groupToJson(const AbelianGroup& g) {
  json out;
  out["rank"] = g.rank;
  out["torsion"] = json::array();
  for (const Int& t : g.torsion) out["torsion"].push_back(toLong(t));
  return out;
}

json ktheoryToJson(const KTheory& k) {
  json out;
  out["K0"] = groupToJson(k.k0);
  out["K1"] = groupToJson(k.k1);
  out["identity_class"] = k.identityClass;
  return out;
}

std::vector<long long> parseCsvLongs(const std::string& text) {
  std::vector<long long> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(cur, &used);
    } catch (const std::exception&) {
      fail(ErrorCode::Syntax, "expected an integer, got '" + cur + "'");
    }
    while (used < cur.size() && std::isspace(static_cast<unsigned char>(cur[used])))
      ++used;
    if (used != cur.size())
      fail(ErrorCode::Syntax, "trailing characters in integer '" + cur + "'");
    out.push_back(v);
  }
  return out;
}

EPSeq parseSeqArg(const Params& par, const std::string& text) {
  const size_t bar = text.find('|');
  if (bar == std::string::npos)
    return makeEPSeq(par, {}, parseCsvLongs(text));
  return makeEPSeq(par, parseCsvLongs(text.substr(0, bar)),
                   parseCsvLongs(text.substr(bar + 1)));
}

Descriptor parseDescriptorArg(const Params& par, const std::string& text) {
  const size_t colon = text.find(':');
  if (colon == std::string::npos)
    fail(ErrorCode::Syntax, "descriptor needs the form kind:data");
  const std::string kind = text.substr(0, colon);
  const std::string data = text.substr(colon + 1);
  if (kind == "finite") return finiteDescriptor(normalize(par, parseWord(data)));
  if (kind == "coset") return cosetDescriptor(par, parseCsvLongs(data));
  if (kind == "c0") return c0Descriptor(par, parseSeqArg(par, data));
  if (kind == "cinf") return cinfDescriptor(par, parseSeqArg(par, data));
  if (kind == "cn1") {
    const size_t semi = data.find(';');
    if (semi == std::string::npos)
      fail(ErrorCode::Syntax, "cn1 needs digits;tails");
    return cn1Descriptor(par, parseCsvLongs(data.substr(0, semi)),
                         parseCsvLongs(data.substr(semi + 1)));
  }
  if (kind == "cn2") {
    const size_t semi = data.find(';');
    if (semi == std::string::npos)
      fail(ErrorCode::Syntax, "cn2 needs sequence;index");
    Int n = 0;
    try {
      n = Int(data.substr(semi + 1));
    } catch (const std::exception&) {
      fail(ErrorCode::Syntax, "bad index in cn2 descriptor");
    }
    return cn2Descriptor(par, parseSeqArg(par, data.substr(0, semi)), n);
  }
  fail(ErrorCode::Syntax, "unknown descriptor kind '" + kind + "'");
}

}  // namespace bsp
