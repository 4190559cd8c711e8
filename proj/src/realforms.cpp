// SPDX-License-Identifier: Apache-2.0

#include "sorklie/realforms.hpp"

#include <algorithm>
#include <array>

#include "sorklie/errors.hpp"

namespace sorklie {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidRealForm(what);
}

std::string pq(const char* name, int p, int q) {
  return std::string(name) + "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

RootSystemType simple_type(RootSystemType t, const char* wrapper) {
  require(!t.is_reducible(), std::string(wrapper) + "(" + t.name() + ") is not simple");
  return t;
}

struct NamedForm {
  Family family;
  int rank;
  int index;
  bool compact;
};

// Real forms of the exceptional algebras, labelled by the signature of the
// Killing form.
constexpr std::array<NamedForm, 17> kExceptionalForms{{
    {Family::E, 6, 6, false},    {Family::E, 6, 2, false},     {Family::E, 6, -14, false},
    {Family::E, 6, -26, false},  {Family::E, 6, -78, true},    {Family::E, 7, 7, false},
    {Family::E, 7, -5, false},   {Family::E, 7, -25, false},   {Family::E, 7, -133, true},
    {Family::E, 8, 8, false},    {Family::E, 8, -24, false},   {Family::E, 8, -248, true},
    {Family::F, 4, 4, false},    {Family::F, 4, -20, false},   {Family::F, 4, -52, true},
    {Family::G, 2, 2, false},    {Family::G, 2, -14, true},
}};

}  // namespace

RealFormDescriptor RealFormDescriptor::complex_simple(RootSystemType t) {
  return {RealFormKind::ComplexSimple, simple_type(t, "complex"), 0, 0};
}

RealFormDescriptor RealFormDescriptor::compact(RootSystemType t) {
  return {RealFormKind::Compact, simple_type(t, "compact"), 0, 0};
}

RealFormDescriptor RealFormDescriptor::split(RootSystemType t) {
  return {RealFormKind::Split, simple_type(t, "split"), 0, 0};
}

RealFormDescriptor RealFormDescriptor::su(int n) {
  require(n >= 2, "su(" + std::to_string(n) + ") needs n >= 2");
  return compact(RootSystemType::make(Family::A, n - 1));
}

RealFormDescriptor RealFormDescriptor::su(int p, int q) {
  require(p >= 0 && q >= 0 && p + q >= 2, pq("su", p, q) + " needs p, q >= 0 and p+q >= 2");
  if (p == 0 || q == 0) return su(p + q);
  return {RealFormKind::SU, std::nullopt, p, q};
}

RealFormDescriptor RealFormDescriptor::sl_real(int n) {
  require(n >= 2, "sl(" + std::to_string(n) + ",R) needs n >= 2");
  return split(RootSystemType::make(Family::A, n - 1));
}

RealFormDescriptor RealFormDescriptor::sl_complex(int n) {
  require(n >= 2, "sl(" + std::to_string(n) + ",C) needs n >= 2");
  return complex_simple(RootSystemType::make(Family::A, n - 1));
}

RealFormDescriptor RealFormDescriptor::sl_quaternion(int n) {
  require(n >= 1, "sl(" + std::to_string(n) + ",H) needs n >= 1");
  return {RealFormKind::SLQuaternion, std::nullopt, n, 0};
}

RealFormDescriptor RealFormDescriptor::so(int p, int q) {
  require(p >= 0 && q >= 0 && p + q >= 3, pq("so", p, q) + " needs p, q >= 0 and p+q >= 3");
  if (p + q == 4) {
    require((p == 3 && q == 1) || (p == 1 && q == 3), pq("so", p, q) + " is not simple");
    return complex_simple(RootSystemType::make(Family::A, 1));
  }
  return {RealFormKind::SO, std::nullopt, p, q};
}

RealFormDescriptor RealFormDescriptor::so_star(int size) {
  require(size % 2 == 0 && size >= 6, "so*(" + std::to_string(size) + ") needs an even size >= 6");
  return {RealFormKind::SOStar, std::nullopt, size / 2, 0};
}

RealFormDescriptor RealFormDescriptor::sp_real(int n) {
  require(n >= 1, "sp(" + std::to_string(n) + ",R) needs n >= 1");
  return {RealFormKind::SPReal, std::nullopt, n, 0};
}

RealFormDescriptor RealFormDescriptor::sp(int p, int q) {
  require(p >= 0 && q >= 0 && p + q >= 1, pq("sp", p, q) + " needs p, q >= 0 and p+q >= 1");
  return {RealFormKind::SP, std::nullopt, p, q};
}

RealFormDescriptor RealFormDescriptor::exceptional(Family family, int rank, int index) {
  const auto it = std::find_if(kExceptionalForms.begin(), kExceptionalForms.end(), [&](const NamedForm& f) {
    return f.family == family && f.rank == rank && f.index == index;
  });
  require(it != kExceptionalForms.end(), std::string(1, static_cast<char>(family)) + std::to_string(rank) + "(" +
                                             std::to_string(index) + ") is not a real form");
  return {RealFormKind::Exceptional, RootSystemType::make(family, rank), index, 0};
}

std::string RealFormDescriptor::name() const {
  switch (kind_) {
    case RealFormKind::ComplexSimple:
      return "complex(" + type_->name() + ")";
    case RealFormKind::Compact:
      if (type_->family() == Family::A) return "su(" + std::to_string(type_->rank() + 1) + ")";
      return "compact(" + type_->name() + ")";
    case RealFormKind::Split:
      if (type_->family() == Family::A) return "sl(" + std::to_string(type_->rank() + 1) + ",R)";
      return "split(" + type_->name() + ")";
    case RealFormKind::SU:
      return pq("su", p_, q_);
    case RealFormKind::SLQuaternion:
      return "sl(" + std::to_string(p_) + ",H)";
    case RealFormKind::SO:
      return pq("so", p_, q_);
    case RealFormKind::SOStar:
      return "so*(" + std::to_string(2 * p_) + ")";
    case RealFormKind::SPReal:
      return "sp(" + std::to_string(p_) + ",R)";
    case RealFormKind::SP:
      return pq("sp", p_, q_);
    case RealFormKind::Exceptional:
      return type_->name() + "(" + std::to_string(p_) + ")";
  }
  return "?";
}

std::string to_string(NuCase c) {
  switch (c) {
    case NuCase::ComplexStructure:
      return "complex-structure";
    case NuCase::RealForm:
      return "real-form";
    case NuCase::SopqException:
      return "so(p,q)-exception";
  }
  return "?";
}

RootSystemType complexification_type(const RealFormDescriptor& d) {
  switch (d.kind()) {
    case RealFormKind::ComplexSimple:
    case RealFormKind::Compact:
    case RealFormKind::Split:
    case RealFormKind::Exceptional:
      return *d.type();
    case RealFormKind::SU:
      return RootSystemType::make(Family::A, d.p() + d.q() - 1);
    case RealFormKind::SLQuaternion:
      return RootSystemType::make(Family::A, 2 * d.p() - 1);
    case RealFormKind::SO: {
      const int n = d.p() + d.q();
      // so(3,C) = sl(2,C)
      if (n == 3) return RootSystemType::make(Family::A, 1);
      return n % 2 != 0 ? RootSystemType::make(Family::B, n / 2) : RootSystemType::make(Family::D, n / 2);
    }
    case RealFormKind::SOStar:
      return RootSystemType::make(Family::D, d.p());
    case RealFormKind::SPReal:
      return RootSystemType::make(Family::C, d.p());
    case RealFormKind::SP:
      return RootSystemType::make(Family::C, d.p() + d.q());
  }
  throw InvalidRealForm("unknown real form kind");
}

bool is_sopq_exception(const RealFormDescriptor& d) {
  if (d.kind() != RealFormKind::SO) return false;
  return d.p() % 2 != 0 && d.q() % 2 != 0 && (d.p() + d.q()) % 4 == 0;
}

NuResult nu_simple(const RealFormDescriptor& d, bool want_certificate) {
  const RootSystemType t = complexification_type(d);
  const int sork = sork_formula(t);
  NuResult result{sork, NuCase::RealForm, sork, std::nullopt};
  if (d.kind() == RealFormKind::ComplexSimple) {
    result.nu_case = NuCase::ComplexStructure;
  } else if (is_sopq_exception(d)) {
    result.nu_case = NuCase::SopqException;
    result.nu = sork - 1;
  }
  if (want_certificate) {
    auto exact = sork_exact(build_root_system(t));
    if (exact.n != static_cast<std::size_t>(sork))
      throw Error("search found sork(" + t.name() + ") = " + std::to_string(exact.n) + ", closed form gives " +
                  std::to_string(sork));
    exact.certificate.roots.resize(static_cast<std::size_t>(result.nu));
    result.certificate = std::move(exact.certificate);
  }
  return result;
}

std::vector<RealFormDescriptor> real_form_catalog(CatalogBounds bounds) {
  using D = RealFormDescriptor;
  std::vector<D> out;
  std::vector<RootSystemType> types;
  for (int r = 1; r <= bounds.max_n; ++r) types.push_back(RootSystemType::make(Family::A, r));
  for (int r = 2; r <= bounds.max_n; ++r) types.push_back(RootSystemType::make(Family::B, r));
  for (int r = 3; r <= bounds.max_n; ++r) types.push_back(RootSystemType::make(Family::C, r));
  for (int r = 4; r <= bounds.max_n; ++r) types.push_back(RootSystemType::make(Family::D, r));
  for (int r = 6; r <= std::min(8, bounds.max_n); ++r) types.push_back(RootSystemType::make(Family::E, r));
  if (bounds.max_n >= 4) types.push_back(RootSystemType::make(Family::F, 4));
  if (bounds.max_n >= 2) types.push_back(RootSystemType::make(Family::G, 2));

  for (auto t : types) out.push_back(D::complex_simple(t));
  for (auto t : types) out.push_back(D::compact(t));
  for (int n = 2; n <= bounds.max_n; ++n) out.push_back(D::sl_real(n));
  for (int n = 2; n <= bounds.max_n; ++n) out.push_back(D::sl_quaternion(n));
  for (int n = 3; n <= bounds.max_n; ++n) out.push_back(D::sp_real(n));
  for (int n = 5; n <= bounds.max_n; ++n) out.push_back(D::so_star(2 * n));
  for (int sum = 3; sum <= bounds.max_pq; ++sum)
    for (int q = 1; 2 * q <= sum; ++q) {
      const int p = sum - q;
      out.push_back(D::su(p, q));
      out.push_back(D::sp(p, q));
      if ((sum % 2 != 0 && sum >= 5) || (sum % 2 == 0 && sum >= 8)) out.push_back(D::so(p, q));
    }
  for (const auto& f : kExceptionalForms)
    if (!f.compact && f.rank <= bounds.max_n) out.push_back(D::exceptional(f.family, f.rank, f.index));
  return out;
}

std::vector<RealFormDescriptor> nu_one_catalog(CatalogBounds bounds) {
  std::vector<RealFormDescriptor> out;
  for (const auto& d : real_form_catalog(bounds))
    if (nu_simple(d).nu == 1) out.push_back(d);
  return out;
}

}  // namespace sorklie
