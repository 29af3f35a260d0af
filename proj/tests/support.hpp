#pragma once

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "hopflim/hopflim.hpp"
#include "hopflim/testkit.hpp"

namespace hopflim::test {

using Q = Rationals;
using Fp = PrimeField;

template <Field F>
Vector<F> vec(const F& k, std::initializer_list<long long> xs) {
  Vector<F> v;
  for (auto x : xs) v.push_back(k.from_int(x));
  return v;
}

template <Field F>
Vector<F> basis_vector(const F& k, std::size_t n, std::size_t i) {
  Vector<F> v(n, k.zero());
  v[i] = k.one();
  return v;
}

/// Certified morphism; fails the current test when the certificate does not
/// reach the object level.
template <class Obj>
Morphism<Obj> certified(const Obj& dom, const Obj& cod, const Matrix<typename Obj::field_type>& m) {
  auto f = make_morphism(dom, cod, m);
  auto r = certify(f);
  EXPECT_TRUE(r.pass) << r.message();
  return f;
}

template <class Obj>
Morphism<Obj> identity_of(const Obj& o) {
  return certified(o, o, Matrix<typename Obj::field_type>::identity(o.field(), o.dim()));
}

/// Span of the basis vectors of kG indexed by `elements`.
template <Field F>
Subspace<F> span_of_elements(const F& k, std::size_t n, const std::vector<std::size_t>& elements) {
  std::vector<Vector<F>> vs;
  for (auto e : elements) vs.push_back(basis_vector(k, n, e));
  return Subspace<F>::span(k, n, vs);
}

}  // namespace hopflim::test
