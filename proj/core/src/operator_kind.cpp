#include "illposed/operator_kind.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "illposed/errors.hpp"

namespace illposed {

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == sep) {
      parts.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

double to_double(const std::string& s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw InvalidArgument("bad number '" + s + "'");
  return v;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

// "a=1,b=2" -> {a:1, b:2}
std::map<std::string, double> key_values(const std::string& s) {
  std::map<std::string, double> kv;
  for (const auto& item : split(s, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidArgument("expected key=value in '" + s + "'");
    kv[item.substr(0, eq)] = to_double(item.substr(eq + 1));
  }
  return kv;
}

Interval pair_of(const std::string& s, const std::string& label) {
  auto eq = s.find('=');
  if (eq == std::string::npos || s.substr(0, eq) != label)
    throw InvalidArgument("expected " + label + "=lo,hi");
  auto nums = split(s.substr(eq + 1), ',');
  if (nums.size() != 2) throw InvalidArgument("expected " + label + "=lo,hi");
  return Interval(to_double(nums[0]), to_double(nums[1]));
}

void check_laplace(double a, double b) {
  if (!(a > 0)) throw InvalidArgument("Laplace operators need 0 < a");
  Interval(a, b);
}

}  // namespace

OperatorKind make_hilbert(Interval I, Interval J) {
  if (!(I.b < J.a || J.b < I.a))
    throw InvalidArgument("truncated Hilbert transform needs disjoint intervals");
  return HilbertTruncated{I, J};
}

OperatorKind make_laplace(double a, double b) {
  check_laplace(a, b);
  return LaplaceTT{Interval(a, b)};
}

OperatorKind make_laplace_adjoint(double a, double b) {
  check_laplace(a, b);
  return LaplaceAdjointTT{Interval(a, b), HalfLineDomain::for_laplace(a)};
}

OperatorKind make_laplace_adjoint(double a, double b, HalfLineDomain half) {
  check_laplace(a, b);
  return LaplaceAdjointTT{Interval(a, b), half};
}

OperatorKind make_fourier() { return FourierTT{Interval(-1.0, 1.0)}; }

OperatorKind parse_operator_kind(std::string_view text) {
  const auto parts = split(text, ':');
  const std::string& head = parts[0];
  if (head == "fourier") {
    if (parts.size() == 1) return make_fourier();
    auto kv = key_values(parts[1]);
    if (parts.size() == 2 && kv.size() == 2 && kv.count("a") && kv.count("b") && kv["a"] == -1 &&
        kv["b"] == 1)
      return make_fourier();
    throw InvalidArgument("fourier supports only [-1,1]");
  }
  if (head == "hilbert") {
    if (parts.size() != 3) throw InvalidArgument("expected hilbert:I=lo,hi:J=lo,hi");
    return make_hilbert(pair_of(parts[1], "I"), pair_of(parts[2], "J"));
  }
  if (head == "laplace" || head == "laplace-adjoint") {
    if (parts.size() != 2) throw InvalidArgument("expected " + head + ":a=..,b=..");
    auto kv = key_values(parts[1]);
    if (kv.size() != 2 || !kv.count("a") || !kv.count("b"))
      throw InvalidArgument("expected " + head + ":a=..,b=..");
    return head == "laplace" ? make_laplace(kv["a"], kv["b"]) : make_laplace_adjoint(kv["a"], kv["b"]);
  }
  throw InvalidArgument("unknown operator '" + std::string(text) + "'");
}

std::string to_string(const OperatorKind& kind) {
  struct V {
    std::string operator()(const HilbertTruncated& h) const {
      return "hilbert:I=" + fmt(h.I.a) + "," + fmt(h.I.b) + ":J=" + fmt(h.J.a) + "," + fmt(h.J.b);
    }
    std::string operator()(const LaplaceTT& l) const {
      return "laplace:a=" + fmt(l.ab.a) + ",b=" + fmt(l.ab.b);
    }
    std::string operator()(const LaplaceAdjointTT& l) const {
      return "laplace-adjoint:a=" + fmt(l.ab.a) + ",b=" + fmt(l.ab.b);
    }
    std::string operator()(const FourierTT&) const { return "fourier"; }
  };
  return std::visit(V{}, kind);
}

Domain input_domain(const OperatorKind& kind) {
  struct V {
    Domain operator()(const HilbertTruncated& h) const { return h.I; }
    Domain operator()(const LaplaceTT& l) const { return l.ab; }
    Domain operator()(const LaplaceAdjointTT& l) const { return l.half; }
    Domain operator()(const FourierTT& f) const { return f.sym; }
  };
  return std::visit(V{}, kind);
}

}  // namespace illposed
