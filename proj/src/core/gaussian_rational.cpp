// Copyright 2026 The levelone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "levelone/core/gaussian_rational.hpp"

#include "levelone/core/error.hpp"

namespace levelone {

std::string GaussianRational::str() const {
  std::string s = re_.get_str();
  if (sgn(im_) == 0) return s;
  if (sgn(im_) > 0) s += "+";
  return s + im_.get_str() + "i";
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& b) { return *this = *this + b; }
GaussianRational& GaussianRational::operator-=(const GaussianRational& b) { return *this = *this - b; }
GaussianRational& GaussianRational::operator*=(const GaussianRational& b) { return *this = *this * b; }
GaussianRational& GaussianRational::operator/=(const GaussianRational& b) { return *this = *this / b; }

GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
  return {mpq_class(a.re() + b.re()), mpq_class(a.im() + b.im())};
}

GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
  return {mpq_class(a.re() - b.re()), mpq_class(a.im() - b.im())};
}

GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
  return {mpq_class(a.re() * b.re() - a.im() * b.im()), mpq_class(a.re() * b.im() + a.im() * b.re())};
}

GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
  mpq_class d = b.re() * b.re() + b.im() * b.im();
  if (sgn(d) == 0) throw NumericalError("division by zero in Q(i)");
  return {mpq_class((a.re() * b.re() + a.im() * b.im()) / d),
          mpq_class((a.im() * b.re() - a.re() * b.im()) / d)};
}

}  // namespace levelone
