#include "bidouble/cover_type.hpp"

#include <limits>
#include <numeric>
#include <string>

#include "bidouble/errors.hpp"

namespace bidouble {

namespace {

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    throw Error(ErrorCode::Overflow, std::to_string(x) + " + " + std::to_string(y));
  }
  return out;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(x, y, &out)) {
    throw Error(ErrorCode::Overflow, std::to_string(x) + " - " + std::to_string(y));
  }
  return out;
}

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw Error(ErrorCode::Overflow, std::to_string(x) + " * " + std::to_string(y));
  }
  return out;
}

bool same_parity(std::int64_t x, std::int64_t y) noexcept { return ((x ^ y) & 1) == 0; }

// x > 2y for any int64 inputs.
bool exceeds_twice(std::int64_t x, std::int64_t y) noexcept {
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  constexpr auto kMin = std::numeric_limits<std::int64_t>::min();
  if (y > kMax / 2) return false;
  if (y < kMin / 2) return true;
  return x > 2 * y;
}

}  // namespace

std::string to_string(const CoverType& t) {
  return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.m2) +
         "," + std::to_string(t.n2) + ")";
}

std::vector<std::string> constraint_violations(const CoverType& t) {
  std::vector<std::string> out;
  if (!exceeds_twice(t.a, t.n2))
    out.push_back("a > 2*n2 fails (a=" + std::to_string(t.a) + ", n2=" + std::to_string(t.n2) +
                  ")");
  if (t.n2 < 3) out.push_back("n2 >= 3 fails (n2=" + std::to_string(t.n2) + ")");
  if (!exceeds_twice(t.m2, t.b))
    out.push_back("m2 > 2*b fails (m2=" + std::to_string(t.m2) + ", b=" + std::to_string(t.b) +
                  ")");
  if (t.b < 3) out.push_back("b >= 3 fails (b=" + std::to_string(t.b) + ")");
  if (!same_parity(t.a, t.n2))
    out.push_back("a = n2 (mod 2) fails (a=" + std::to_string(t.a) +
                  ", n2=" + std::to_string(t.n2) + ")");
  if (!same_parity(t.b, t.m2))
    out.push_back("b = m2 (mod 2) fails (b=" + std::to_string(t.b) +
                  ", m2=" + std::to_string(t.m2) + ")");
  return out;
}

bool is_admissible(const CoverType& t) noexcept {
  return t.n2 >= 3 && t.b >= 3 && exceeds_twice(t.a, t.n2) &&
         exceeds_twice(t.m2, t.b) && same_parity(t.a, t.n2) &&
         same_parity(t.b, t.m2);
}

CoverType validate_type(const CoverType& t, const Limits& limits) {
  std::vector<std::string> too_large;
  const auto check_cap = [&](const char* name, std::int64_t value) {
    if (value > limits.field_cap || value < -limits.field_cap)
      too_large.push_back(std::string(name) + "=" + std::to_string(value) + " exceeds cap " +
                          std::to_string(limits.field_cap));
  };
  check_cap("a", t.a);
  check_cap("b", t.b);
  check_cap("m2", t.m2);
  check_cap("n2", t.n2);
  if (!too_large.empty()) throw Error(ErrorCode::OutOfRange, std::move(too_large));

  auto violations = constraint_violations(t);
  if (!violations.empty()) throw Error(ErrorCode::ConstraintViolation, std::move(violations));
  return t;
}

CoverType validate_type(std::int64_t a, std::int64_t b, std::int64_t m2, std::int64_t n2,
                        const Limits& limits) {
  return validate_type(CoverType{a, b, m2, n2}, limits);
}

DerivedParams derive_params(const CoverType& t) {
  return {
      checked_sub(checked_add(t.n2, t.a), 2),
      checked_sub(checked_add(t.m2, t.b), 2),
      checked_sub(t.a, t.n2),
      checked_sub(t.m2, t.b),
  };
}

std::int64_t divisibility_index(const DerivedParams& p) { return std::gcd(p.u, p.v); }

SurfaceInvariants surface_invariants(const CoverType& t) {
  const DerivedParams p = derive_params(t);
  const std::int64_t uv = checked_mul(p.u, p.v);
  const std::int64_t wz = checked_mul(p.w, p.z);

  SurfaceInvariants inv;
  inv.kk = checked_mul(8, uv);
  // u, v, w, z are all even, so both halvings are exact.
  inv.chi = checked_add(checked_add(checked_mul(3, uv) / 2, checked_add(p.u, p.v)), 2) - wz / 2;
  inv.euler = checked_sub(checked_mul(12, inv.chi), inv.kk);
  inv.sigma = checked_sub(inv.kk, checked_mul(8, inv.chi));
  inv.b2 = inv.euler - 2;
  inv.b_plus = 2 * inv.chi - 1;
  inv.b_minus = inv.b2 - inv.b_plus;
  inv.p_g = inv.chi - 1;
  inv.r = divisibility_index(p);
  return inv;
}

CoverType canonicalize(const CoverType& t) noexcept {
  const CoverType s = swap_branch_data(t);
  return s < t ? s : t;
}

}  // namespace bidouble
