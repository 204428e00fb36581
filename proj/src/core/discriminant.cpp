#include "bidouble/discriminant.hpp"

#include <string>

#include "bidouble/errors.hpp"

namespace bidouble {

BigInt parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw Error(ErrorCode::InvalidArgument, "empty integer literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9')
      throw Error(ErrorCode::InvalidArgument, "not a decimal integer: '" + text + "'");
  }
  BigInt value{text.substr(start)};
  return text[0] == '-' ? BigInt{-value} : value;
}

BigInt cusp_count_general(const BigInt& deg_f, const BigInt& genus, const BigInt& euler) {
  if (deg_f < 3) {
    throw Error(ErrorCode::InvalidArgument,
                "covering degree must be at least 3, got " + to_decimal(deg_f));
  }
  return detail::cusp_count(deg_f, genus, euler);
}

BigInt node_count(const BigInt& deg_b, const BigInt& genus, const BigInt& cusps) {
  if (deg_b < 3) {
    throw Error(ErrorCode::InvalidArgument,
                "branch curve degree must be at least 3, got " + to_decimal(deg_b));
  }
  BigInt nodes = detail::node_residual(deg_b, genus, cusps);
  if (nodes < 0) {
    throw Error(ErrorCode::NegativeNodes, "degree " + to_decimal(deg_b) + ", genus " +
                                              to_decimal(genus) + ", cusps " +
                                              to_decimal(cusps) + " give " +
                                              to_decimal(nodes) + " nodes");
  }
  return nodes;
}

namespace {

void require_mult(std::int64_t mult) {
  if (mult < kMinCanonicalMultiple) {
    throw Error(ErrorCode::MultTooSmall,
                "canonical multiple must be at least 5, got " + std::to_string(mult));
  }
}

std::string join(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(values[i]);
  }
  return out;
}

std::vector<ArgumentStep> build_argument(const ZariskiCertificate& c) {
  const std::string k = std::to_string(c.members.size());
  const std::string r_list = join(c.indices);
  std::vector<ArgumentStep> steps;

  steps.push_back({"homeomorphic-surfaces",
                   "all " + k + " members have K^2 = " + std::to_string(c.shared.kk) +
                       " and chi = " + std::to_string(c.shared.chi) +
                       "; the surfaces are simply connected with even intersection form, "
                       "so they are pairwise homeomorphic"});
  steps.push_back({"distinct-indices", "divisibility indices r = " + r_list +
                                           " are pairwise distinct, so no two members "
                                           "are diffeomorphic"});

  std::string curves;
  if (c.profiles.empty()) {
    curves = "no canonical multiple requested";
  } else {
    for (std::size_t i = 0; i < c.profiles.size(); ++i) {
      const auto& p = c.profiles[i];
      if (i) curves += "; ";
      curves += "m = " + std::to_string(p.mult) + ": degree " + to_decimal(p.deg_b) +
                ", genus " + to_decimal(p.genus) + ", " + to_decimal(p.cusps) + " cusps, " +
                to_decimal(p.nodes) + " nodes";
    }
  }
  steps.push_back({"equal-curve-data",
                   "every member's m-canonical branch curve has the same degree and "
                   "singularity data (" + curves +
                       "), so the curves have homeomorphic tubular neighbourhoods"});
  steps.push_back({"lift-homeomorphism",
                   "suppose (P2, B_i) and (P2, B_j) are homeomorphic for some i != j; the "
                   "homeomorphism lifts to a homeomorphism S_i -> S_j carrying the "
                   "ramification curve R_i onto R_j"});
  steps.push_back({"ramification-class",
                   "R ~ (3m+1) K_S, so the divisibility of [R] in H^2(S, Z) is (3m+1) r; "
                   "a homeomorphism carrying R_i onto R_j forces r_i = r_j"});
  steps.push_back({"contradiction",
                   "r = " + r_list + " are pairwise distinct, so no such homeomorphism "
                   "exists and for each requested m the " + k +
                       " branch curves form a Zariski " + k + "-tuple"});
  return steps;
}

}  // namespace

DiscriminantProfile discriminant_profile(const SurfaceInvariants& inv, std::int64_t mult) {
  require_mult(mult);
  const auto f = detail::profile_fields<BigInt>(inv.kk, inv.euler, mult);

  DiscriminantProfile p;
  p.mult = mult;
  p.deg_f = f.deg_f;
  p.deg_b = f.deg_b;
  p.half_deg = f.deg_b / 2;
  p.genus = f.genus;
  p.cusps = cusp_count_general(f.deg_f, f.genus, BigInt{inv.euler});
  p.nodes = node_count(f.deg_b, f.genus, p.cusps);
  p.ram_mult = 3 * mult + 1;
  return p;
}

ZariskiCertificate zariski_certificate(std::span<const CoverType> types,
                                       std::span<const std::int64_t> mults,
                                       const Limits& limits) {
  for (const auto mult : mults) require_mult(mult);

  const TupleVerdict verdict = is_catanese_tuple(types, limits);
  if (!verdict.is_catanese) throw Error(ErrorCode::NotCatanese, verdict.failures);

  ZariskiCertificate c;
  for (const auto& t : types) c.members.push_back(canonicalize(t));
  c.shared = verdict.shared_key;
  c.indices = verdict.indices;

  // Members share (K^2, chi), hence the Euler number, hence every profile.
  const SurfaceInvariants inv = surface_invariants(types.front());
  for (const auto mult : mults) c.profiles.push_back(discriminant_profile(inv, mult));
  c.argument = build_argument(c);
  return c;
}

}  // namespace bidouble
