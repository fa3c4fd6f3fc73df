#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hgx/scalar.hpp"

// The acceptance suite: every published determinant evaluation, sequence and
// transformation, checked exactly.
namespace hgx::verify {

/// Collects the outcome of many exact comparisons; keeps the first few failures.
class Check {
 public:
  void expect(bool ok, const std::string& what);
  void expect_equal(const Scalar& got, const Scalar& want, const std::string& what);
  void note(const std::string& text);

  bool passed() const { return failures_ == 0; }
  std::size_t count() const { return count_; }
  /// "<count> checks" on success, else the recorded failures.
  std::string summary() const;

 private:
  std::size_t count_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> messages_;
  std::vector<std::string> notes_;
};

struct Criterion {
  int number = 0;
  std::string name;
  std::string title;
  std::function<Check()> run;
};

struct Result {
  int number = 0;
  std::string name;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// All criteria in order.
const std::vector<Criterion>& criteria();

/// Runs one criterion; exceptions count as failures.
Result run(const Criterion& c);

/// Runs every criterion, or only the one named `only`.
/// Throws std::invalid_argument for an unknown name.
std::vector<Result> run_all(const std::optional<std::string>& only = std::nullopt);

/// "PASS  5 prop3  0.12s  <title>: <detail>".
std::string format(const Result& r);

/*
 * The period-14 evaluation for ell = 3, t = 1 given the path counts f(0..):
 * at least 84 terms are needed for orders up to 42.
 */
Check check_prop3(std::span<const Scalar> f_terms);

}  // namespace hgx::verify
