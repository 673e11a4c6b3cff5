#include "kas/matrix_rep.hpp"

#include "kas/group_law.hpp"

namespace kas {

Mat2<RatFunc> mat_A_symbolic() {
  return mat_A(RatFunc::variable("h"), RatFunc::variable("u"));
}

Mat2<RatFunc> conjugation_matrix_symbolic() {
  const RatFunc h = RatFunc::variable("h");
  const RatFunc one = RatFunc::constant(Rational(1));
  return Mat2<RatFunc>{-h, h, one, one};
}

CocycleIdentityReport verify_cocycle_identities() {
  const RatFunc u = RatFunc::variable("u");
  const RatFunc v = RatFunc::variable("v");
  const RatFunc h = RatFunc::variable("h");
  const RatFunc one = RatFunc::constant(Rational(1));

  const Mat2<RatFunc> au = mat_A(h, u);
  const Mat2<RatFunc> av = mat_A(h, v);
  const Mat2<RatFunc> product = au * av;

  const RatFunc sum = lorentz_law().compose;  // (u+v)/(1+h^2uv)
  const Mat2<RatFunc> a_sum = mat_A(h, sum);

  const RatFunc b = one + h * h * u * v;

  CocycleIdentityReport r;
  r.product_identity = (product == b * a_sum);

  const RatFunc det_u = au.det();
  const RatFunc det_v = av.det();
  r.determinant_coboundary = ratfunc_eq(det_u * det_v, b * b * a_sum.det());

  const std::vector<std::string> uv = {"u", "v"};
  const RatFunc sigma_form =
      RatFunc::from_poly(elementary_symmetric(0, uv)) +
      h * h * RatFunc::from_poly(elementary_symmetric(2, uv));
  r.cocycle_sigma_form = ratfunc_eq(b, sigma_form);

  // Entrywise-squared form of B(u)B(v) = B(u+v), denominators cleared.
  const RatFunc det_sum = a_sum.det();
  const auto entry_ok = [&](const RatFunc& lhs, const RatFunc& rhs) {
    return ratfunc_eq(lhs * lhs * det_sum, rhs * rhs * det_u * det_v);
  };
  r.normalized_family = entry_ok(product.a, a_sum.a) && entry_ok(product.b, a_sum.b) &&
                        entry_ok(product.c, a_sum.c) && entry_ok(product.d, a_sum.d);

  return r;
}

}  // namespace kas
