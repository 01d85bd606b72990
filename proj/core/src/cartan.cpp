#include "qaff/cartan.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>

namespace qaff {

namespace {

const char* family_letter(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
  }
  return "?";
}

std::vector<std::vector<int>> finite_matrix(const AffineType& t) {
  const int n = t.rank;
  std::vector<std::vector<int>> a(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 1; i <= n; ++i) a[i][i] = 2;
  auto bond = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      a[n - 1][n] = -1;
      a[n][n - 1] = -2;
      break;
    case Family::C:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      a[n - 1][n] = -2;
      a[n][n - 1] = -1;
      break;
    case Family::D:
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1);
      bond(n - 2, n);
      break;
    case Family::E:
      bond(1, 3);
      bond(3, 4);
      bond(4, 5);
      bond(2, 4);
      for (int i = 5; i < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(1, 2);
      a[2][3] = -1;
      a[3][2] = -2;
      bond(3, 4);
      break;
    case Family::G:
      a[1][2] = -1;
      a[2][1] = -3;
      break;
  }
  return a;
}

std::vector<int> finite_symmetrizers(const AffineType& t) {
  const int n = t.rank;
  std::vector<int> d(n + 1, 1);
  d[0] = 0;
  switch (t.family) {
    case Family::B:
      for (int i = 1; i < n; ++i) d[i] = 2;
      break;
    case Family::C:
      d[n] = 2;
      break;
    case Family::F:
      d = {0, 2, 2, 1, 1};
      break;
    case Family::G:
      d = {0, 3, 1};
      break;
    default:
      break;
  }
  return d;
}

}  // namespace

AffineType AffineType::parse(const std::string& text) {
  if (text.size() < 2) throw CartanError("invalid type '" + text + "'");
  Family f;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': f = Family::A; break;
    case 'B': f = Family::B; break;
    case 'C': f = Family::C; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    case 'F': f = Family::F; break;
    case 'G': f = Family::G; break;
    default: throw CartanError("invalid type '" + text + "': family must be one of A-G");
  }
  std::string digits = text.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw CartanError("invalid type '" + text + "': rank must be a positive integer");
  AffineType t{f, std::stoi(digits)};
  t.validate();
  return t;
}

void AffineType::validate() const {
  bool ok = false;
  std::string range;
  switch (family) {
    case Family::A: ok = rank >= 1; range = "n >= 1"; break;
    case Family::B: ok = rank >= 3; range = "n >= 3"; break;
    case Family::C: ok = rank >= 2; range = "n >= 2"; break;
    case Family::D: ok = rank >= 4; range = "n >= 4"; break;
    case Family::E: ok = rank >= 6 && rank <= 8; range = "n in {6,7,8}"; break;
    case Family::F: ok = rank == 4; range = "n = 4"; break;
    case Family::G: ok = rank == 2; range = "n = 2"; break;
  }
  if (!ok) throw CartanError("invalid rank for type " + name() + ": need " + range);
}

std::string AffineType::name() const { return family_letter(family) + std::to_string(rank); }

int height(const Coords& x) { return std::accumulate(x.begin(), x.end(), 0); }

AffineRoot AffineRoot::operator+(const AffineRoot& o) const {
  AffineRoot out = *this;
  for (std::size_t k = 0; k < finite.size(); ++k) out.finite[k] += o.finite[k];
  out.delta += o.delta;
  return out;
}

AffineRoot AffineRoot::operator-(const AffineRoot& o) const { return *this + (-o); }

AffineRoot AffineRoot::operator-() const { return *this * -1; }

AffineRoot AffineRoot::operator*(int c) const {
  AffineRoot out = *this;
  for (auto& x : out.finite) x *= c;
  out.delta *= c;
  return out;
}

std::string AffineRoot::str() const {
  std::string out;
  auto add_term = [&](int c, const std::string& sym) {
    if (c == 0) return;
    if (!out.empty()) out += c > 0 ? "+" : "-";
    else if (c < 0) out += "-";
    int m = c < 0 ? -c : c;
    if (m != 1) out += std::to_string(m);
    out += sym;
  };
  add_term(delta, "d");
  for (std::size_t k = 0; k < finite.size(); ++k) add_term(finite[k], "a" + std::to_string(k + 1));
  return out.empty() ? "0" : out;
}

CartanData::CartanData(AffineType type) : type_(type), n_(type.rank) {
  type_.validate();
  const int n = n_;
  matrix_ = finite_matrix(type_);
  d_ = finite_symmetrizers(type_);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (d_[i] * matrix_[i][j] != d_[j] * matrix_[j][i])
        throw CartanError("internal: finite Cartan matrix not symmetrized by d");

  // Positive roots by closure under simple reflections.
  std::set<Coords> seen;
  std::vector<Coords> frontier;
  for (int i = 1; i <= n; ++i) {
    seen.insert(unit(i));
    frontier.push_back(unit(i));
  }
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const auto& x : frontier) {
      for (int i = 1; i <= n; ++i) {
        int p = 0;
        for (int j = 1; j <= n; ++j) p += matrix_[i][j] * x[j - 1];
        Coords y = x;
        y[i - 1] -= p;
        if (std::all_of(y.begin(), y.end(), [](int c) { return c >= 0; }) && seen.insert(y).second)
          next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  roots_.assign(seen.begin(), seen.end());
  std::stable_sort(roots_.begin(), roots_.end(),
                   [](const Coords& a, const Coords& b) { return height(a) < height(b); });
  theta_ = roots_.back();

  // Affine node.
  const int tt = finite_bilinear(theta_, theta_);
  d_[0] = tt / 2;
  matrix_[0][0] = 2;
  for (int j = 1; j <= n; ++j) {
    int ip = finite_bilinear(theta_, unit(j));
    matrix_[0][j] = -2 * ip / tt;
    matrix_[j][0] = -ip / d_[j];
  }
  lacing_ = *std::max_element(d_.begin(), d_.end());

  kac_.assign(n + 1, 1);
  dual_kac_.assign(n + 1, 1);
  for (int i = 1; i <= n; ++i) {
    kac_[i] = theta_[i - 1];
    dual_kac_[i] = theta_[i - 1] * d_[i] / d_[0];
  }

  for (int i = 0; i <= n; ++i) {
    int null_row = 0, central = 0;
    for (int j = 0; j <= n; ++j) {
      null_row += matrix_[i][j] * kac_[j];
      central += dual_kac_[j] * matrix_[j][i];
      if (i != j && matrix_[i][j] > 0) throw CartanError("internal: positive off-diagonal entry");
      if (d_[i] * matrix_[i][j] != d_[j] * matrix_[j][i]) throw CartanError("internal: affine matrix not symmetrizable");
    }
    if (null_row != 0 || central != 0) throw CartanError("internal: delta or K check failed");
    if (d_[i] * kac_[i] != lacing_ * dual_kac_[i]) throw CartanError("internal: symmetrizer convention check failed");
  }
}

bool CartanData::is_root(const Coords& x) const {
  return std::binary_search(roots_.begin(), roots_.end(), x, [](const Coords& a, const Coords& b) {
    int ha = height(a), hb = height(b);
    return ha != hb ? ha < hb : a < b;
  });
}

bool CartanData::is_cominuscule(int r) const {
  check_index(r, false);
  return kac_[r] == 1;
}

int CartanData::finite_bilinear(const Coords& x, const Coords& y) const {
  int out = 0;
  for (int i = 1; i <= n_; ++i) {
    if (x[i - 1] == 0) continue;
    for (int j = 1; j <= n_; ++j) out += x[i - 1] * form(i, j) * y[j - 1];
  }
  return out;
}

int CartanData::bilinear(const AffineRoot& x, const AffineRoot& y) const { return finite_bilinear(x.finite, y.finite); }

int CartanData::pairing(int i, const AffineRoot& x) const {
  check_index(i, true);
  return 2 * bilinear(simple(i), x) / (2 * d_[i]);
}

int CartanData::pair_lambda(int r, const AffineRoot& x) const {
  check_index(r, false);
  return x.finite[r - 1];
}

AffineRoot CartanData::simple(int i) const {
  check_index(i, true);
  if (i == 0) {
    AffineRoot a0{theta_, 1};
    for (auto& c : a0.finite) c = -c;
    return a0;
  }
  return AffineRoot{unit(i), 0};
}

AffineRoot CartanData::delta() const { return AffineRoot{Coords(n_, 0), 1}; }

Coords CartanData::unit(int i) const {
  Coords x(n_, 0);
  x[i - 1] = 1;
  return x;
}

bool CartanData::is_positive(const AffineRoot& x) const {
  if (x.delta > 0) return true;
  if (x.delta < 0) return false;
  bool any = false;
  for (int c : x.finite) {
    if (c < 0) return false;
    any = any || c > 0;
  }
  return any;
}

std::vector<int> CartanData::to_affine_coords(const AffineRoot& x) const {
  std::vector<int> c(n_ + 1);
  c[0] = x.delta;
  for (int i = 1; i <= n_; ++i) c[i] = x.finite[i - 1] + x.delta * kac_[i];
  return c;
}

AffineRoot CartanData::from_affine_coords(const std::vector<int>& c) const {
  AffineRoot x{Coords(n_), c[0]};
  for (int i = 1; i <= n_; ++i) x.finite[i - 1] = c[i] - c[0] * kac_[i];
  return x;
}

void CartanData::check_index(int i, bool allow_zero) const {
  if (i < (allow_zero ? 0 : 1) || i > n_)
    throw CartanError("index " + std::to_string(i) + " out of range for " + type_.name() + ": need " +
                      (allow_zero ? "0" : "1") + ".." + std::to_string(n_));
}

const CartanData& cartan_data(const AffineType& type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<CartanData>> cache;
  type.validate();
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[type.name()];
  if (!slot) slot = std::make_unique<CartanData>(type);
  return *slot;
}

const CartanData& cartan_data(const std::string& type) { return cartan_data(AffineType::parse(type)); }

}  // namespace qaff
