// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstring>
#include <stdexcept>

#include "sorklie/errors.hpp"
#include "sorklie/groups.hpp"

namespace sorklie {

namespace {

bool deep_equal(const GroupPtr& a, const GroupPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

bool operator==(const GroupExpr& a, const GroupExpr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const SimpleLie& x) { return x.form == std::get<SimpleLie>(b.node).form; },
          [&](const Solvable& x) {
            const auto& y = std::get<Solvable>(b.node);
            return x.kind == y.kind && x.dim == y.dim;
          },
          [&](const Finite& x) { return x.order == std::get<Finite>(b.node).order; },
          [&](const DirectProduct& x) {
            const auto& y = std::get<DirectProduct>(b.node);
            return std::equal(x.factors.begin(), x.factors.end(), y.factors.begin(), y.factors.end(), deep_equal);
          },
          [&](const FreeProduct& x) {
            const auto& y = std::get<FreeProduct>(b.node);
            return deep_equal(x.left, y.left) && deep_equal(x.right, y.right);
          },
          [&](const Extension& x) {
            const auto& y = std::get<Extension>(b.node);
            return x.mode == y.mode && deep_equal(x.kernel, y.kernel) && deep_equal(x.quotient, y.quotient);
          },
          [&](const FiniteIndex& x) { return deep_equal(x.inner, std::get<FiniteIndex>(b.node).inner); },
      },
      a.node);
}

namespace group {

namespace {
GroupPtr make(decltype(GroupExpr::node) node) { return std::make_shared<const GroupExpr>(GroupExpr{std::move(node)}); }
}  // namespace

GroupPtr simple(RealFormDescriptor d) { return make(SimpleLie{std::move(d)}); }
GroupPtr solvable() { return make(Solvable{Solvable::Kind::Generic, 0}); }
GroupPtr integers() { return make(Solvable{Solvable::Kind::InfiniteCyclic, 0}); }

GroupPtr euclidean(int n) {
  if (n < 1) throw std::invalid_argument("R^n needs n >= 1");
  return make(Solvable{Solvable::Kind::Euclidean, n});
}

GroupPtr finite(std::int64_t order) {
  if (order < 1) throw std::invalid_argument("finite group order must be >= 1");
  return make(Finite{order});
}

GroupPtr finite_unknown() { return make(Finite{std::nullopt}); }

GroupPtr direct(std::vector<GroupPtr> factors) {
  if (factors.empty()) throw std::invalid_argument("direct product needs at least one factor");
  if (factors.size() == 1) return factors.front();
  DirectProduct out;
  for (auto& f : factors) {
    if (const auto* dp = std::get_if<DirectProduct>(&f->node))
      out.factors.insert(out.factors.end(), dp->factors.begin(), dp->factors.end());
    else
      out.factors.push_back(std::move(f));
  }
  return make(std::move(out));
}

GroupPtr power(GroupPtr g, int n) {
  if (n < 0) throw std::invalid_argument("negative exponent");
  if (n == 0) return finite(1);
  return direct(std::vector<GroupPtr>(static_cast<std::size_t>(n), g));
}

GroupPtr free_product(GroupPtr a, GroupPtr b) { return make(FreeProduct{std::move(a), std::move(b)}); }

GroupPtr extension(GroupPtr kernel, GroupPtr quotient, ExtensionMode mode) {
  return make(Extension{std::move(kernel), std::move(quotient), mode});
}

GroupPtr finite_index(GroupPtr inner) { return make(FiniteIndex{std::move(inner)}); }

}  // namespace group

std::string to_string(ExtensionMode m) {
  switch (m) {
    case ExtensionMode::Split:
      return "split";
    case ExtensionMode::Central:
      return "central";
    case ExtensionMode::General:
      return "general";
  }
  return "?";
}

namespace {

constexpr int kMaxExponent = 1024;

bool iequal(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  GroupPtr parse() {
    auto e = expr();
    skip_ws();
    if (i_ < s_.size()) fail(std::string("unexpected '") + s_[i_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(i_ + 1, what); }

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }

  void expect(char c) {
    if (peek() != c) {
      if (i_ >= s_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "'");
    }
    ++i_;
  }

  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  int integer() {
    if (!at_digit()) fail(i_ >= s_.size() ? "expected an integer before end of input" : "expected an integer");
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + i_, value);
    if (ec != std::errc{}) {
      i_ = start;
      fail("integer out of range");
    }
    return value;
  }

  int signed_integer() {
    const bool negative = accept('-');
    if (!negative) accept('+');
    const int v = integer();
    return negative ? -v : v;
  }

  // Letters followed by digits, e.g. "E8" or "solvable".
  std::string_view word() {
    skip_ws();
    const std::size_t start = i_;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    return s_.substr(start, i_ - start);
  }

  // The longest keyword at the cursor, case-insensitive. Single-letter
  // keywords let "ZxZ" read as Z x Z.
  std::string_view keyword() {
    static constexpr std::array<std::string_view, 13> kWords{
        "solvable", "complex", "compact", "finite", "split", "ext", "so", "su", "sl", "sp", "fi", "R", "Z"};
    skip_ws();
    const std::string_view rest = s_.substr(i_);
    if (rest.size() >= 2 && std::strchr("EeFfGg", rest[0]) && std::isdigit(static_cast<unsigned char>(rest[1]))) {
      std::size_t n = 1;
      while (n < rest.size() && std::isdigit(static_cast<unsigned char>(rest[n]))) ++n;
      i_ += n;
      return rest.substr(0, n);
    }
    for (auto w : kWords) {
      if (rest.size() >= w.size() && iequal(rest.substr(0, w.size()), w)) {
        i_ += w.size();
        return rest.substr(0, w.size());
      }
    }
    return {};
  }

  char field_letter() {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(peek())));
    if (c != 'R' && c != 'C' && c != 'H') fail("expected R, C or H");
    ++i_;
    return c;
  }

  RootSystemType type_name() {
    const std::size_t at = i_;
    const auto w = word();
    if (w.empty()) {
      i_ = at;
      skip_ws();
      fail("expected a root system type");
    }
    return checked_type(w);
  }

  static RootSystemType checked_type(std::string_view w) {
    try {
      return RootSystemType::parse(w);
    } catch (const InvalidType& e) {
      throw InvalidRealForm(e.what());
    }
  }

  GroupPtr expr() {
    auto lhs = term();
    for (;;) {
      const char c = peek();
      if (c == 'x' || c == 'X') {
        ++i_;
        lhs = group::direct({lhs, term()});
      } else if (c == '*') {
        ++i_;
        lhs = group::free_product(lhs, term());
      } else {
        return lhs;
      }
    }
  }

  GroupPtr term() {
    auto a = atom();
    if (accept('^')) {
      const std::size_t at = i_;
      const int n = integer();
      if (n > kMaxExponent) {
        i_ = at;
        skip_ws();
        fail("exponent larger than " + std::to_string(kMaxExponent));
      }
      a = group::power(a, n);
    }
    return a;
  }

  GroupPtr atom() {
    if (accept('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    skip_ws();
    const std::size_t at = i_;
    const auto kw = keyword();
    if (kw.empty()) {
      if (i_ >= s_.size()) fail("expected a group before end of input");
      fail("expected a group");
    }
    using D = RealFormDescriptor;
    const auto is = [&](std::string_view w) { return iequal(kw, w); };

    if (is("Z")) {
      if (accept('/')) {
        const std::size_t n_at = i_;
        const int n = integer();
        if (n < 1) {
          i_ = n_at;
          skip_ws();
          fail("Z/n needs n >= 1");
        }
        return group::finite(n);
      }
      return group::integers();
    }
    if (is("R")) {
      expect('^');
      const std::size_t n_at = i_;
      const int n = integer();
      if (n < 1) {
        i_ = n_at;
        skip_ws();
        fail("R^n needs n >= 1");
      }
      return group::euclidean(n);
    }
    if (is("solvable")) return group::solvable();
    if (is("finite")) return group::finite_unknown();
    if (is("fi")) {
      expect('(');
      auto e = expr();
      expect(')');
      return group::finite_index(e);
    }
    if (is("ext")) {
      expect('(');
      auto k = expr();
      expect(',');
      auto q = expr();
      expect(',');
      skip_ws();
      const std::size_t mode_at = i_;
      const auto m = word();
      ExtensionMode mode;
      if (iequal(m, "split")) {
        mode = ExtensionMode::Split;
      } else if (iequal(m, "central")) {
        mode = ExtensionMode::Central;
      } else if (iequal(m, "general")) {
        mode = ExtensionMode::General;
      } else {
        i_ = mode_at;
        fail("expected split, central or general");
      }
      expect(')');
      return group::extension(k, q, mode);
    }
    if (is("complex") || is("split") || is("compact")) {
      expect('(');
      const auto t = type_name();
      expect(')');
      if (is("complex")) return group::simple(D::complex_simple(t));
      if (is("split")) return group::simple(D::split(t));
      return group::simple(D::compact(t));
    }
    if (is("su")) {
      expect('(');
      const int p = integer();
      if (accept(',')) {
        const int q = integer();
        expect(')');
        return group::simple(D::su(p, q));
      }
      expect(')');
      return group::simple(D::su(p));
    }
    if (is("sl")) {
      expect('(');
      const int n = integer();
      expect(',');
      const char f = field_letter();
      expect(')');
      if (f == 'R') return group::simple(D::sl_real(n));
      if (f == 'C') return group::simple(D::sl_complex(n));
      return group::simple(D::sl_quaternion(n));
    }
    if (is("so")) {
      if (accept('*')) {
        expect('(');
        const int size = integer();
        expect(')');
        return group::simple(D::so_star(size));
      }
      expect('(');
      const int p = integer();
      expect(',');
      const int q = integer();
      expect(')');
      return group::simple(D::so(p, q));
    }
    if (is("sp")) {
      expect('(');
      const int p = integer();
      expect(',');
      const char c = peek();
      if (c == 'R' || c == 'r') {
        ++i_;
        expect(')');
        return group::simple(D::sp_real(p));
      }
      const int q = integer();
      expect(')');
      return group::simple(D::sp(p, q));
    }
    // exceptional name such as E6
    const auto t = checked_type(kw);
    if (t.family() != Family::E && t.family() != Family::F && t.family() != Family::G) {
      i_ = at;
      fail("expected a group");
    }
    expect('(');
    const int index = signed_integer();
    expect(')');
    return group::simple(D::exceptional(t.family(), t.rank(), index));
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

bool is_composite(const GroupPtr& g) {
  return std::holds_alternative<DirectProduct>(g->node) || std::holds_alternative<FreeProduct>(g->node);
}

std::string wrapped(const GroupPtr& g) {
  const auto s = to_string(*g);
  return is_composite(g) ? "(" + s + ")" : s;
}

}  // namespace

GroupPtr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupExpr& e) {
  return std::visit(Overloaded{
                        [](const SimpleLie& x) { return x.form.name(); },
                        [](const Solvable& x) -> std::string {
                          switch (x.kind) {
                            case Solvable::Kind::Euclidean:
                              return "R^" + std::to_string(x.dim);
                            case Solvable::Kind::InfiniteCyclic:
                              return "Z";
                            case Solvable::Kind::Generic:
                              break;
                          }
                          return "solvable";
                        },
                        [](const Finite& x) -> std::string {
                          return x.order ? "Z/" + std::to_string(*x.order) : "finite";
                        },
                        [](const DirectProduct& x) {
                          std::string out;
                          for (const auto& f : x.factors) out += (out.empty() ? "" : " x ") + wrapped(f);
                          return out;
                        },
                        [](const FreeProduct& x) { return wrapped(x.left) + " * " + wrapped(x.right); },
                        [](const Extension& x) {
                          return "ext(" + to_string(*x.kernel) + ", " + to_string(*x.quotient) + ", " +
                                 to_string(x.mode) + ")";
                        },
                        [](const FiniteIndex& x) { return "fi(" + to_string(*x.inner) + ")"; },
                    },
                    e.node);
}

}  // namespace sorklie
