#pragma once

// Subcommand implementations. Each writes to the given streams and returns
// the process exit code: 0 success, 1 claim violation, 2 usage or parse error.

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qheis/classify.hpp"

namespace qheis::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json };

struct Config {
  std::string p = "generic";  // integer >= 2 or "generic"
  Format format = Format::Text;
  bool defn2_literal = false;
  bool exclude_central_c_powers = false;
  std::uint64_t seed = 12345;
  std::optional<std::string> out;  // also write the JSON payload here

  const ScalarContext& context() const;
  // Throws UsageError in generic mode.
  const ScalarContext& torsion_context(const std::string& command) const;
  LieBasisConvention convention() const;
};

struct ClosureArgs {
  int depth = 4;
  long kmax = 4;
  long dmax = 4;
  unsigned threads = 1;
};

// Unset fields take the suite defaults, which scale with p.
struct VerifyArgs {
  std::string suite = "all";
  std::optional<long> kmax;
  std::optional<long> dmax;
  std::optional<long> lmax;
  std::optional<int> depth;
  std::optional<int> pairs;
};

struct TablesArgs {
  long kmax = 2;
  long lmax = 3;
};

// Suites accepted by verify, "all" last.
const std::vector<std::string>& verify_suites();

int cmd_normalize(const Config& cfg, const std::string& expr, std::ostream& out, std::ostream& err);
int cmd_comm(const Config& cfg, const std::string& x, const std::string& y, std::ostream& out, std::ostream& err);
int cmd_member(const Config& cfg, const std::string& expr, std::ostream& out, std::ostream& err);
int cmd_construct(const Config& cfg, const std::string& expr, std::ostream& out, std::ostream& err);
int cmd_closure(const Config& cfg, const ClosureArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const Config& cfg, const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_tables(const Config& cfg, const TablesArgs& args, std::ostream& out, std::ostream& err);

}  // namespace qheis::cli
