#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "trslab/oracle.hpp"
#include "trslab/problem.hpp"
#include "trslab/problem_io.hpp"
#include "trslab/rng.hpp"

using namespace trs;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

void write_file(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p);
  out << body;
}

}  // namespace

TEST_SUITE_BEGIN("problem");

TEST_CASE("chebyshev nodes") {
  Vector d4 = gen_chebyshev_diag(-1.0, 1.0, 4);
  CHECK(d4[0] == doctest::Approx(std::cos(M_PI / 8.0)).epsilon(1e-12));

  Vector d2 = gen_chebyshev_diag(-5.0, 5.0, 2);
  CHECK(d2[0] == doctest::Approx(5.0 * std::cos(M_PI / 4.0)).epsilon(1e-12));
  CHECK(d2[1] == doctest::Approx(5.0 * std::cos(3.0 * M_PI / 4.0)).epsilon(1e-12));

  Vector sym = gen_chebyshev_diag(-3.0, 3.0, 9);
  for (Index j = 0; j < 9; ++j) {
    CHECK(sym[j] == doctest::Approx(-sym[8 - j]).epsilon(1e-12));
    CHECK(sym[j] > -3.0);
    CHECK(sym[j] < 3.0);
    if (j > 0) CHECK(sym[j] < sym[j - 1]);
  }

  CHECK_THROWS_AS(gen_chebyshev_diag(1.0, 1.0, 3), InvalidInterval);
}

TEST_CASE("seeded gradient family") {
  TrsProblem p1 = gen_example1(-5, 5, 500, 1.0, 42);
  TrsProblem p2 = gen_example1(-5, 5, 500, 1.0, 42);
  TrsProblem p3 = gen_example1(-5, 5, 500, 1.0, 43);
  CHECK(p1.g_norm() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK((p1.g - p2.g).norm() == 0.0);  // bit-identical
  CHECK((p1.g - p3.g).norm() > 0.0);
  CHECK(p1.order() == 500);
  CHECK(p1.a.is_diagonal());
}

TEST_CASE("detached-eigenvalue family") {
  TrsProblem p = gen_example2(1e-8);
  CHECK(p.order() == 10001);

  ExactSolution sol = classify_and_solve(p);
  CHECK(sol.which == TrsCase::EasyBoundary);
  CHECK(sol.lambda_opt == doctest::Approx(500.0).epsilon(1e-9));
  CHECK(sol.kappa == doctest::Approx(3e4).epsilon(1e-3));

  // stationarity of the closed-form solution: (A + 500 I) x + g = 0
  Example2Exact exact = example2_exact(1e-8);
  Vector resid = p.a.apply(exact.x_opt) + 500.0 * exact.x_opt + p.g;
  CHECK(resid.norm() <= 1e-10 * p.g_norm());
  CHECK(exact.x_opt.norm() == doctest::Approx(p.delta).epsilon(1e-14));
}

TEST_CASE("detached-eigenvalue family at rho = 0") {
  TrsProblem p = gen_example2(0.0);
  CHECK(p.delta == doctest::Approx(0.1).epsilon(1e-14));
  CHECK(p.g.head(10000).norm() == 0.0);
  CHECK(p.g[10000] == doctest::Approx(-0.01).epsilon(1e-14));
}

TEST_CASE("diag-json round trip is bit exact") {
  Vector d = (Vector(3) << 1.0 / 3.0, -2.7182818284590452, 4e-17).finished();
  Vector g = (Vector(3) << 0.1, 0.2, -0.3).finished();
  TrsProblem p(SymOperator::diagonal(d), g, 0.12345678901234567);
  const auto path = temp_file("trs_roundtrip.json");
  save_diag_json(p, path);
  TrsProblem q = load_diag_json(path);
  CHECK((q.a.diagonal_entries() - d).cwiseAbs().maxCoeff() == 0.0);
  CHECK((q.g - g).cwiseAbs().maxCoeff() == 0.0);
  CHECK(q.delta == p.delta);
  std::filesystem::remove(path);
}

TEST_CASE("diag-json error paths") {
  const auto path = temp_file("trs_bad.json");
  write_file(path, R"({"diag": [1, 2], "g": [1], "delta": 1})");
  CHECK_THROWS_AS(load_diag_json(path), DimensionMismatch);
  write_file(path, R"({"diag": [1, 2], "g": [1, 0]})");
  CHECK_THROWS_AS(load_diag_json(path), ParseError);
  write_file(path, "not json");
  CHECK_THROWS_AS(load_diag_json(path), ParseError);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_diag_json(temp_file("trs_missing_file.json")), IoError);
}

TEST_CASE("matrix market coordinate symmetric") {
  const auto path = temp_file("trs_sym.mtx");
  write_file(path,
             "%%MatrixMarket matrix coordinate real symmetric\n"
             "% comment line\n"
             "2 2 3\n"
             "1 1 3.0\n"
             "2 1 1.0\n"
             "2 2 3.0\n");
  DenseSym a = load_matrix_market(path);
  CHECK(a(0, 0) == 3.0);
  CHECK(a(0, 1) == 1.0);
  CHECK(a(1, 0) == 1.0);
  CHECK(a(1, 1) == 3.0);
  std::filesystem::remove(path);
}

TEST_CASE("matrix market general must be symmetric") {
  const auto path = temp_file("trs_asym.mtx");
  write_file(path,
             "%%MatrixMarket matrix coordinate real general\n"
             "2 2 3\n"
             "1 1 3.0\n"
             "1 2 1.0\n"
             "2 2 3.0\n");  // missing (2,1): asymmetric
  CHECK_THROWS_AS(load_matrix_market(path), AsymmetricMatrix);
  std::filesystem::remove(path);
}

TEST_CASE("matrix market array format") {
  const auto path = temp_file("trs_arr.mtx");
  write_file(path,
             "%%MatrixMarket matrix array real symmetric\n"
             "2 2\n"
             "3.0\n1.0\n3.0\n");
  DenseSym a = load_matrix_market(path);
  CHECK(a(0, 1) == 1.0);
  CHECK(a(1, 1) == 3.0);
  std::filesystem::remove(path);
}

TEST_CASE("full problem loader wires gradient and radius") {
  const auto mpath = temp_file("trs_full.mtx");
  const auto gpath = temp_file("trs_full_g.txt");
  write_file(mpath,
             "%%MatrixMarket matrix coordinate real symmetric\n"
             "2 2 3\n1 1 3.0\n2 1 1.0\n2 2 3.0\n");
  write_file(gpath, "1.0\n2.0\n");
  TrsProblem p = load_problem(mpath, ProblemFormat::MatrixMarket, gpath, 0.5);
  CHECK(p.order() == 2);
  CHECK(p.delta == 0.5);
  CHECK(p.g[1] == 2.0);

  write_file(gpath, "1.0\n2.0\n3.0\n");
  CHECK_THROWS_AS(load_problem(mpath, ProblemFormat::MatrixMarket, gpath, 0.5),
                  DimensionMismatch);
  std::filesystem::remove(mpath);
  std::filesystem::remove(gpath);
}

TEST_CASE("operator symmetry probe") {
  TrsProblem p = gen_example1(-2, 2, 40, 1.0, 5);
  Rng rng(99);
  for (int probe = 0; probe < 4; ++probe) {
    Vector u = rng.normal_vector(40), v = rng.normal_vector(40);
    const double uav = u.dot(p.a.apply(v));
    const double vau = v.dot(p.a.apply(u));
    CHECK(std::abs(uav - vau) <= 1e-10 * u.norm() * v.norm() * 2.0);
  }
}

TEST_SUITE_END();
