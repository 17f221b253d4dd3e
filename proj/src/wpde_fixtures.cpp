#include <map>

#include "exgeo/wpde/model.hpp"

namespace exgeo::wpde {

namespace {

// Contact Heisenberg frame on (x,y,z): X = d/dx + y/2 d/dz,
// Y = d/dy - x/2 d/dz, Z = d/dz, with [X,Y] = -Z.
const char* kHeisenbergFrame = R"(
coord x 1
coord y 1
coord z 2
field X : x -> 1 ; z -> 1/2*y
field Y : y -> 1 ; z -> -1/2*x
field Z : z -> 1
)";

const std::map<std::string, std::string>& registry() {
  static const std::map<std::string, std::string> fixtures = [] {
    std::map<std::string, std::string> m;
    std::string heis = kHeisenbergFrame;

    m["case_i_model"] = heis +
                        "eq X.X = 0\n"
                        "eq Y.Y = 0\n";

    m["case_i_deformed"] = "param a\n" + heis +
                           "eq X.X = a*Y\n"
                           "eq Y.Y = 0\n";

    m["ea"] = "param a\n" + heis +
              "eq X.X.X = a*Y.Y\n"
              "eq X.Y.X = 0\n"
              "eq Y.X.Y = 0\n"
              "eq Y.Y.Y = 0\n";

    m["g2_model"] =
        "coord x 1\n"
        "coord y 1\n"
        "coord z 1\n"
        "coord w 1\n"
        "coord v 2\n"
        "field X : x -> 1 ; v -> 2*y\n"
        "field Y : y -> 1 ; v -> -x\n"
        "field Z : z -> 1\n"
        "field W : w -> 1 ; v -> -z\n"
        "field V : v -> 1\n"
        "eq Z.Z = 0\n"
        "eq W.W = 0\n"
        "eq Y.Z = 0\n"
        "eq X.W = 0\n"
        "eq 2*Z.X + Y.Y = 0\n"
        "eq 2*Y.W + X.X = 0\n"
        "eq X.Y + Y.X + W.Z + Z.W = 0\n";

    m["segre"] =
        "coord x 1\n"
        "coord y 1\n"
        "field Dx : x -> 1\n"
        "field Dy : y -> 1\n"
        "eq Dx.Dx = 0\n"
        "eq Dy.Dy = 0\n";

    auto veronese = [](int n) {
      std::string s;
      for (int i = 1; i <= n; ++i) s += "coord x" + std::to_string(i) + " 1\n";
      for (int i = 1; i <= n; ++i) s += "field D" + std::to_string(i) + " : x" + std::to_string(i) + " -> 1\n";
      // all third derivatives vanish except D1^3 = D2^2
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          for (int k = j; k <= n; ++k) {
            std::string lhs = "D" + std::to_string(i) + ".D" + std::to_string(j) + ".D" + std::to_string(k);
            if (i == 1 && j == 1 && k == 1)
              s += "eq " + lhs + " = D2.D2\n";
            else
              s += "eq " + lhs + " = 0\n";
          }
      return s;
    };
    m["veronese_n2"] = veronese(2);
    m["veronese_n3"] = veronese(3);
    return m;
  }();
  return fixtures;
}

std::string ode_fixture(int k) {
  // y^{(k+1)} = 0 on the line
  std::string s =
      "coord x 1\n"
      "field D : x -> 1\n"
      "eq D";
  for (int i = 0; i < k; ++i) s += ".D";
  s += " = 0\n";
  return s;
}

}  // namespace

std::optional<std::string> fixture_text(const std::string& name) {
  auto it = registry().find(name);
  if (it != registry().end()) return it->second;
  if (name.rfind("ode_", 0) == 0) {
    try {
      int k = std::stoi(name.substr(4));
      if (k >= 0 && k <= 12) return ode_fixture(k);  // ode_k: y^{(k+1)} = 0
    } catch (...) {
    }
  }
  return std::nullopt;
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  out.push_back("ode_<k>");
  return out;
}

std::optional<std::string> fixture_basis_text(const std::string& name) {
  static const std::map<std::string, std::string> bases = {
      {"ea",
       "1\n"
       "x\n"
       "y\n"
       "z\n"
       "x^2\n"
       "x*y\n"
       "x*z\n"
       "y^2 + 1/3*a*x^3\n"
       "y*z - 1/24*a*x^4\n"
       "z^2 + 1/120*a*x^5\n"},
      {"case_i_deformed",
       "1\n"
       "x\n"
       "z + 1/2*x*y\n"
       "y + 1/2*a*x^2\n"
       "-z + 1/2*x*y + 1/6*a*x^3\n"
       "x*(-z + 1/2*x*y) + 1/12*a*x^4\n"
       "y*(z + 1/2*x*y) + 1/2*a*x^2*(z - 1/6*x*y) - 1/60*a^2*x^5\n"
       "(z + 1/2*x*y)*(-z + 1/2*x*y) + 1/6*a*x^3*z - 1/360*a^2*x^6\n"},
      {"g2_model",
       "1\n"
       "x\n"
       "y\n"
       "z\n"
       "w\n"
       "x^2 - y*w\n"
       "y^2 - x*z\n"
       "x*y - z*w - v\n"
       "v\n"
       "w*(y^2 - x*z) - x*v\n"
       "x*(y^2 - x*z) - y*v\n"
       "y*(y^2 - x*z) - z*v\n"
       "w*(x*y - z*w - v) - x*(x^2 - y*w)\n"
       "v*(x*y - z*w - v) - (x^2 - y*w)*(y^2 - x*z)\n"},
      {"segre",
       "-x*y\n"
       "x\n"
       "y\n"
       "-1\n"},
  };
  auto it = bases.find(name);
  if (it == bases.end()) return std::nullopt;
  return it->second;
}

}  // namespace exgeo::wpde
