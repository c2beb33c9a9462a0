#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "xgroup/field.hpp"
#include "xgroup/group.hpp"

namespace xgroup {

/// A constructed group with its provenance. `intended_case` is a case label
/// ("1.1" ... "4.2") or "NotX".
struct ConstructionRecord {
  std::string family;
  nlohmann::ordered_json parameters;
  std::string intended_case;
  Group group;
  /// Postconditions verified during construction.
  std::vector<std::string> checks;
  /// Search results kept for reproducibility (e.g. matrices found).
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

enum class TwoGroupKind { Dihedral, Semidihedral, Quaternion };
enum class ExponentKind { P, PSquared };
enum class MatrixKind { GL2, SL2, PSL2, PGL2 };
enum class ComplementKind { Cyclic, Quaternion, Case212, Case213, SL2_3, SL2_3_dot2, SL2_5 };

struct Complement {
  ComplementKind kind = ComplementKind::Cyclic;
  std::uint64_t m = 0;          // cyclic order, or |C|
  std::uint64_t two_power = 0;  // quaternion order, or |D|
};

/// "cyclic(8)", "quaternion(16)", "case_2_1_2(3,8)", "case_2_1_3(3,4)",
/// "sl2_3", "sl2_3_dot2", "sl2_5".
Complement parse_complement(const std::string& text);
std::string to_string(const Complement& c);

ConstructionRecord basic_abelian(const std::vector<std::uint64_t>& invariant_factors);
ConstructionRecord two_group(TwoGroupKind kind, std::uint64_t order);
ConstructionRecord extraspecial(std::uint32_t p, ExponentKind kind);
ConstructionRecord sym_alt(unsigned n, bool alternating);
ConstructionRecord matrix_group(MatrixKind kind, std::uint32_t q);
ConstructionRecord sl2p_dot2(std::uint32_t p);
ConstructionRecord m10();
ConstructionRecord metacyclic(std::uint64_t m, std::uint64_t n, std::uint64_t u);
ConstructionRecord quaternion_metacyclic(std::uint64_t m, std::uint64_t quaternion_order);
ConstructionRecord affine_frobenius(std::uint32_t p, const Complement& complement);
ConstructionRecord extraspecial_frobenius(std::uint32_t p, std::uint32_t d, std::uint32_t s);
ConstructionRecord heisenberg_extension(std::uint32_t p, std::uint32_t k);

/// Matrices generating the complement G_0 <= GL_2(p) used by
/// affine_frobenius (entries in GF(p)).
std::vector<Mat2> complement_generators(std::uint32_t p, const Complement& complement);

/// Dispatch by family name with parameters as stored in a provenance record.
ConstructionRecord construct(const std::string& family, const nlohmann::json& parameters);
/// Family names accepted by construct().
const std::vector<std::string>& family_names();

}  // namespace xgroup
