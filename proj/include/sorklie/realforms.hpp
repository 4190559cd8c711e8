// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sorklie/roots.hpp"
#include "sorklie/sork.hpp"

namespace sorklie {

enum class RealFormKind {
  ComplexSimple,  // a complex simple algebra viewed as a real one
  Compact,
  Split,
  SU,           // su(p,q), p, q >= 1
  SLQuaternion, // sl(n,H) = su*(2n)
  SO,           // so(p,q)
  SOStar,       // so*(2n)
  SPReal,       // sp(n,R)
  SP,           // sp(p,q)
  Exceptional,  // named exceptional forms such as E6(-26)
};

/// A real simple Lie algebra, identified by its conventional name.
///
/// Construction validates the parameters and applies the aliases the text
/// syntax relies on: su(n) and su(n,0) are Compact(A_{n-1}), sl(n,R) is
/// Split(A_{n-1}), sl(n,C) is ComplexSimple(A_{n-1}), and so(3,1) is
/// ComplexSimple(A1). Throws InvalidRealForm.
class RealFormDescriptor {
 public:
  static RealFormDescriptor complex_simple(RootSystemType t);
  static RealFormDescriptor compact(RootSystemType t);
  static RealFormDescriptor split(RootSystemType t);
  static RealFormDescriptor su(int n);
  static RealFormDescriptor su(int p, int q);
  static RealFormDescriptor sl_real(int n);
  static RealFormDescriptor sl_complex(int n);
  static RealFormDescriptor sl_quaternion(int n);
  static RealFormDescriptor so(int p, int q);
  /// The argument is the matrix size 2n as written in so*(2n).
  static RealFormDescriptor so_star(int size);
  static RealFormDescriptor sp_real(int n);
  static RealFormDescriptor sp(int p, int q);
  /// index is the signature in parentheses, e.g. (E, 6, -26).
  static RealFormDescriptor exceptional(Family family, int rank, int index);

  RealFormKind kind() const noexcept { return kind_; }
  /// The labelled root system type for ComplexSimple, Compact, Split and
  /// Exceptional kinds.
  const std::optional<RootSystemType>& type() const noexcept { return type_; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }

  /// Canonical text form; parsing it yields an equal descriptor.
  std::string name() const;

  friend bool operator==(const RealFormDescriptor&, const RealFormDescriptor&) = default;

 private:
  RealFormDescriptor(RealFormKind kind, std::optional<RootSystemType> type, int p, int q)
      : kind_(kind), type_(type), p_(p), q_(q) {}

  RealFormKind kind_;
  std::optional<RootSystemType> type_;
  int p_ = 0;
  int q_ = 0;
};

enum class NuCase { ComplexStructure, RealForm, SopqException };

std::string to_string(NuCase c);

struct NuResult {
  int nu;
  NuCase nu_case;
  int sork_of_complexification;
  std::optional<OrthCertificate> certificate;
};

/// Root system type of the complexification (for ComplexSimple(t), t itself).
RootSystemType complexification_type(const RealFormDescriptor& d);

/// so(p,q) with p, q odd and p+q divisible by four.
bool is_sopq_exception(const RealFormDescriptor& d);

/// Free subgroup rank of a connected simple Lie group with Lie algebra d.
/// With want_certificate, attaches a canonical strongly orthogonal set of
/// size nu from the complexified root system.
NuResult nu_simple(const RealFormDescriptor& d, bool want_certificate = false);

struct CatalogBounds {
  int max_pq = 8;    // bound on p+q for two-parameter families
  int max_n = 8;     // bound on n for one-parameter families and type ranks
};

/// One descriptor per isomorphism class of real simple Lie algebras within
/// the bounds, with the usual low-rank coincidences removed.
std::vector<RealFormDescriptor> real_form_catalog(CatalogBounds bounds = {});

/// Catalog entries with nu = 1.
std::vector<RealFormDescriptor> nu_one_catalog(CatalogBounds bounds = {});

}  // namespace sorklie
