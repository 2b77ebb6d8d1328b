#include "amekit/pauli.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace amekit {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

int mod_inverse(int value, int prime) {
  int v = ((value % prime) + prime) % prime;
  if (v == 0) fail(ErrorKind::InvalidArgument, "zero has no inverse");
  // prime moduli here are tiny; scan instead of extended Euclid
  for (int k = 1; k < prime; ++k) {
    if (v * k % prime == 1) return k;
  }
  fail(ErrorKind::InvalidArgument, "modulus is not prime");
}

namespace {

int positive_mod(int v, int m) { return ((v % m) + m) % m; }

void check_dim(int dim) {
  if (!is_prime(dim)) {
    fail(ErrorKind::InvalidArgument,
         "qudit dimension must be prime, got " + std::to_string(dim));
  }
}

void check_same_shape(const PauliOperator& p, const PauliOperator& q) {
  if (p.dim() != q.dim()) {
    fail(ErrorKind::Shape, "operators have different qudit dimensions");
  }
  if (p.n_qudits() != q.n_qudits()) {
    fail(ErrorKind::Shape, "operators act on different numbers of qudits");
  }
}

}  // namespace

PauliOperator::PauliOperator(int dim, int n_qudits)
    : dim_(dim), phase_(0), x_(n_qudits, 0), z_(n_qudits, 0) {
  check_dim(dim);
  if (n_qudits <= 0) {
    fail(ErrorKind::InvalidArgument, "operator needs at least one qudit");
  }
}

PauliOperator::PauliOperator(int dim, std::vector<int> x_exps,
                             std::vector<int> z_exps, int phase_exp)
    : dim_(dim), x_(std::move(x_exps)), z_(std::move(z_exps)) {
  check_dim(dim);
  if (x_.empty() || x_.size() != z_.size()) {
    fail(ErrorKind::Shape, "exponent vectors must be nonempty and equal-length");
  }
  for (auto& e : x_) e = positive_mod(e, dim_);
  for (auto& e : z_) e = positive_mod(e, dim_);
  phase_ = positive_mod(phase_exp, phase_order());
}

PauliOperator PauliOperator::identity(int dim, int n_qudits) {
  return PauliOperator(dim, n_qudits);
}

PauliOperator PauliOperator::single_site(int dim, int n_qudits, int site,
                                         int x_exp, int z_exp) {
  PauliOperator p(dim, n_qudits);
  if (site < 0 || site >= n_qudits) {
    fail(ErrorKind::InvalidArgument, "site index out of range");
  }
  p.x_[site] = positive_mod(x_exp, dim);
  p.z_[site] = positive_mod(z_exp, dim);
  return p;
}

bool PauliOperator::exponents_trivial() const {
  return std::all_of(x_.begin(), x_.end(), [](int e) { return e == 0; }) &&
         std::all_of(z_.begin(), z_.end(), [](int e) { return e == 0; });
}

PauliOperator PauliOperator::with_phase(int phase_exp) const {
  PauliOperator p = *this;
  p.phase_ = positive_mod(phase_exp, phase_order());
  return p;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  check_same_shape(p, q);
  const int d = p.dim();
  const int n = p.n_qudits();
  std::vector<int> x(n), z(n);
  int reorder = 0;  // omega exponent from moving q's X block left past p's Z block
  for (int j = 0; j < n; ++j) {
    x[j] = (p.x_exp(j) + q.x_exp(j)) % d;
    z[j] = (p.z_exp(j) + q.z_exp(j)) % d;
    reorder = (reorder + p.z_exp(j) * q.x_exp(j)) % d;
  }
  int phase = p.phase_exp() + q.phase_exp() + reorder * p.omega_units();
  return PauliOperator(d, std::move(x), std::move(z), phase);
}

int symplectic_product(const PauliOperator& p, const PauliOperator& q) {
  check_same_shape(p, q);
  const int d = p.dim();
  int s = 0;
  for (int j = 0; j < p.n_qudits(); ++j) {
    s = positive_mod(s + p.z_exp(j) * q.x_exp(j) - p.x_exp(j) * q.z_exp(j), d);
  }
  return s;
}

PauliOperator power(const PauliOperator& p, int k) {
  if (k < 0) fail(ErrorKind::InvalidArgument, "power expects k >= 0");
  PauliOperator acc = PauliOperator::identity(p.dim(), p.n_qudits());
  for (int i = 0; i < k; ++i) acc = multiply(acc, p);
  return acc;
}

PauliOperator inverse(const PauliOperator& p) {
  const int d = p.dim();
  const int n = p.n_qudits();
  std::vector<int> x(n), z(n);
  int reorder = 0;
  for (int j = 0; j < n; ++j) {
    x[j] = (d - p.x_exp(j)) % d;
    z[j] = (d - p.z_exp(j)) % d;
    reorder = (reorder + p.z_exp(j) * x[j]) % d;
  }
  int phase = -p.phase_exp() - reorder * p.omega_units();
  return PauliOperator(d, std::move(x), std::move(z), phase);
}

namespace {

// Replaces the U+2212 minus sign with ASCII '-' so pasted tables parse.
std::string normalize_minus(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 &&
        static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

// Parses an optional phase prefix, returning its exponent in phase units and
// advancing `pos` past the prefix.
int parse_phase_prefix(const std::string& s, size_t& pos, int dim, int order,
                       int omega_units) {
  if (pos >= s.size()) return 0;
  if (s[pos] == '-') {
    ++pos;
    if (pos < s.size() && s[pos] == 'i') {
      if (dim != 2) fail(ErrorKind::Parse, "phase -i requires dimension 2");
      ++pos;
      return 3;
    }
    if (dim != 2) fail(ErrorKind::Parse, "phase - requires dimension 2");
    return 2;
  }
  if (s[pos] == 'i') {
    if (dim != 2) fail(ErrorKind::Parse, "phase i requires dimension 2");
    ++pos;
    return 1;
  }
  if (s[pos] == 'w') {
    ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
    if (pos == start) fail(ErrorKind::Parse, "phase prefix w needs an exponent");
    int k = std::stoi(s.substr(start, pos - start));
    return k % dim * omega_units % order;
  }
  return 0;
}

}  // namespace

PauliOperator parse_pauli(std::string_view text, int dim) {
  check_dim(dim);
  const std::string s = normalize_minus(text);
  const int order = dim == 2 ? 4 : dim;
  const int omega_units = dim == 2 ? 2 : 1;

  size_t pos = 0;
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
    ++pos;
  }
  int prefix = parse_phase_prefix(s, pos, dim, order, omega_units);

  std::vector<int> x, z;
  int y_count = 0;
  if (dim == 2) {
    for (; pos < s.size(); ++pos) {
      char c = s[pos];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      switch (c) {
        case '1': x.push_back(0); z.push_back(0); break;
        case 'X': x.push_back(1); z.push_back(0); break;
        case 'Z': x.push_back(0); z.push_back(1); break;
        case 'Y': x.push_back(1); z.push_back(1); ++y_count; break;
        default:
          fail(ErrorKind::Parse, std::string("unexpected Pauli token '") + c + "'");
      }
    }
  } else {
    std::istringstream in(s.substr(pos));
    std::string tok;
    while (in >> tok) {
      if (tok == "1") {
        x.push_back(0);
        z.push_back(0);
        continue;
      }
      size_t i = 0;
      int a = 0, b = 0;
      bool seen = false;
      if (i < tok.size() && tok[i] == 'x') {
        ++i;
        size_t start = i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        if (i == start) fail(ErrorKind::Parse, "token x needs an exponent: " + tok);
        a = std::stoi(tok.substr(start, i - start));
        seen = true;
      }
      if (i < tok.size() && tok[i] == 'z') {
        ++i;
        size_t start = i;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        if (i == start) fail(ErrorKind::Parse, "token z needs an exponent: " + tok);
        b = std::stoi(tok.substr(start, i - start));
        seen = true;
      }
      if (!seen || i != tok.size()) {
        fail(ErrorKind::Parse, "malformed qudit token: " + tok);
      }
      if (a < 0 || a >= dim || b < 0 || b >= dim) {
        fail(ErrorKind::Parse, "token exponent out of range: " + tok);
      }
      x.push_back(a);
      z.push_back(b);
    }
  }
  if (x.empty()) fail(ErrorKind::Parse, "Pauli string has no tokens");
  // Y = i X Z, so every Y contributes one unit of i on top of the prefix.
  int phase = prefix + y_count;
  return PauliOperator(dim, std::move(x), std::move(z), phase);
}

PauliOperator parse_pauli(std::string_view text, int dim, int expected_n) {
  PauliOperator p = parse_pauli(text, dim);
  if (p.n_qudits() != expected_n) {
    fail(ErrorKind::Parse, "expected " + std::to_string(expected_n) +
                               " tokens, got " + std::to_string(p.n_qudits()));
  }
  return p;
}

std::string render_pauli(const PauliOperator& p) {
  std::string out;
  if (p.dim() == 2) {
    int y_count = 0;
    std::string body;
    for (int j = 0; j < p.n_qudits(); ++j) {
      int key = p.x_exp(j) * 2 + p.z_exp(j);
      body.push_back("1ZXY"[key]);
      if (key == 3) ++y_count;
    }
    switch (((p.phase_exp() - y_count) % 4 + 4) % 4) {
      case 0: break;
      case 1: out += "i"; break;
      case 2: out += "-"; break;
      case 3: out += "-i"; break;
    }
    out += body;
  } else {
    if (p.phase_exp() != 0) {
      out += "w" + std::to_string(p.phase_exp()) + " ";
    }
    for (int j = 0; j < p.n_qudits(); ++j) {
      if (j > 0) out += " ";
      int a = p.x_exp(j), b = p.z_exp(j);
      if (a == 0 && b == 0) {
        out += "1";
        continue;
      }
      if (a != 0) out += "x" + std::to_string(a);
      if (b != 0) out += "z" + std::to_string(b);
    }
  }
  return out;
}

}  // namespace amekit
