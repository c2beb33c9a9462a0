#include <regex>

#include "xgroup/constructors.hpp"
#include "xgroup/errors.hpp"

namespace xgroup {

Complement parse_complement(const std::string& text) {
  static const std::regex one(R"((cyclic|quaternion)\((\d+)\))");
  static const std::regex two(R"((case_2_1_2|case_2_1_3)\((\d+),\s*(\d+)\))");
  std::smatch m;
  Complement c;
  if (std::regex_match(text, m, one)) {
    if (m[1] == "cyclic") {
      c.kind = ComplementKind::Cyclic;
      c.m = std::stoull(m[2]);
    } else {
      c.kind = ComplementKind::Quaternion;
      c.two_power = std::stoull(m[2]);
    }
  } else if (std::regex_match(text, m, two)) {
    c.kind = m[1] == "case_2_1_2" ? ComplementKind::Case212 : ComplementKind::Case213;
    c.m = std::stoull(m[2]);
    c.two_power = std::stoull(m[3]);
  } else if (text == "sl2_3") {
    c.kind = ComplementKind::SL2_3;
  } else if (text == "sl2_3_dot2") {
    c.kind = ComplementKind::SL2_3_dot2;
  } else if (text == "sl2_5") {
    c.kind = ComplementKind::SL2_5;
  } else {
    fail(ErrorKind::InvalidParameter, "unknown complement kind '" + text + "'");
  }
  return c;
}

std::string to_string(const Complement& c) {
  switch (c.kind) {
    case ComplementKind::Cyclic: return "cyclic(" + std::to_string(c.m) + ")";
    case ComplementKind::Quaternion: return "quaternion(" + std::to_string(c.two_power) + ")";
    case ComplementKind::Case212:
      return "case_2_1_2(" + std::to_string(c.m) + "," + std::to_string(c.two_power) + ")";
    case ComplementKind::Case213:
      return "case_2_1_3(" + std::to_string(c.m) + "," + std::to_string(c.two_power) + ")";
    case ComplementKind::SL2_3: return "sl2_3";
    case ComplementKind::SL2_3_dot2: return "sl2_3_dot2";
    case ComplementKind::SL2_5: return "sl2_5";
  }
  return "";
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{
      "affine",       "basic_abelian", "extraspecial",          "extraspecial_frobenius",
      "heisenberg_extension", "m10",   "matrix_group",          "metacyclic",
      "quaternion_metacyclic", "sl2p_dot2", "sym_alt",          "two_group"};
  return names;
}

namespace {

template <class T>
T get(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::InvalidParameter, std::string("missing parameter '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    fail(ErrorKind::InvalidParameter, std::string("bad value for parameter '") + key + "'");
  }
}

}  // namespace

ConstructionRecord construct(const std::string& family, const nlohmann::json& j) {
  if (family == "basic_abelian") return basic_abelian(get<std::vector<std::uint64_t>>(j, "factors"));
  if (family == "two_group") {
    auto kind = get<std::string>(j, "kind");
    TwoGroupKind k = kind == "dihedral"       ? TwoGroupKind::Dihedral
                     : kind == "semidihedral" ? TwoGroupKind::Semidihedral
                     : kind == "quaternion"   ? TwoGroupKind::Quaternion
                                              : (fail(ErrorKind::InvalidParameter, "unknown two_group kind"),
                                                 TwoGroupKind::Dihedral);
    return two_group(k, get<std::uint64_t>(j, "order"));
  }
  if (family == "extraspecial") {
    auto e = get<std::string>(j, "exponent");
    if (e != "p" && e != "p_squared") fail(ErrorKind::InvalidParameter, "exponent must be p or p_squared");
    return extraspecial(get<std::uint32_t>(j, "p"), e == "p" ? ExponentKind::P : ExponentKind::PSquared);
  }
  if (family == "sym_alt") return sym_alt(get<unsigned>(j, "n"), get<bool>(j, "alternating"));
  if (family == "matrix_group") {
    auto kind = get<std::string>(j, "kind");
    MatrixKind k = kind == "GL2"    ? MatrixKind::GL2
                   : kind == "SL2"  ? MatrixKind::SL2
                   : kind == "PSL2" ? MatrixKind::PSL2
                   : kind == "PGL2" ? MatrixKind::PGL2
                                    : (fail(ErrorKind::InvalidParameter, "unknown matrix kind"), MatrixKind::GL2);
    return matrix_group(k, get<std::uint32_t>(j, "q"));
  }
  if (family == "sl2p_dot2") return sl2p_dot2(get<std::uint32_t>(j, "p"));
  if (family == "m10") return m10();
  if (family == "metacyclic")
    return metacyclic(get<std::uint64_t>(j, "m"), get<std::uint64_t>(j, "n"), get<std::uint64_t>(j, "u"));
  if (family == "quaternion_metacyclic")
    return quaternion_metacyclic(get<std::uint64_t>(j, "m"), get<std::uint64_t>(j, "quaternion_order"));
  if (family == "affine")
    return affine_frobenius(get<std::uint32_t>(j, "p"), parse_complement(get<std::string>(j, "complement")));
  if (family == "extraspecial_frobenius")
    return extraspecial_frobenius(get<std::uint32_t>(j, "p"), get<std::uint32_t>(j, "d"),
                                  get<std::uint32_t>(j, "s"));
  if (family == "heisenberg_extension")
    return heisenberg_extension(get<std::uint32_t>(j, "p"), get<std::uint32_t>(j, "k"));
  fail(ErrorKind::InvalidParameter, "unknown family '" + family + "'");
}

}  // namespace xgroup
