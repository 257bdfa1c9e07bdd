#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

#include <json.hpp>

#include "degseq/engine.hpp"
#include "degseq/oracle.hpp"
#include "degseq/sparse.hpp"

namespace degseq {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInconclusive = 3;

struct RunConfig {
    std::string command;
    std::string function_text;
    long n_lo = 0, n_hi = 0;
    long m_lo = -1, m_hi = -1;  // -1 = theorem default range per n
    long q_lo = 4, q_hi = 10;
    std::string oracle = "graphical";  // graphical | threshold
    long K = 10000;
    long double tau = kDefaultTau;
    std::string format = "text";  // text | json | csv
    unsigned threads = 1;
    std::uint64_t seed = 20240817;  // fixed default: runs are reproducible
};

// "4..9" or "7"
std::pair<long, long> parse_range(const std::string& text);
std::string csv_number(long double v);  // 17 significant digits

nlohmann::json to_json(const Scalar& s);
nlohmann::json to_json(const DegreeSequence& d);
nlohmann::json to_json(const ExtremalReport& rep);
nlohmann::json to_json(const ClassReport& rep, const std::string& spec_text);
nlohmann::json to_json(const EpsilonWindow& win);

int cmd_construct(const std::string& kind, int n, long m, const std::string& bits,
                  const RunConfig& cfg, std::ostream& out);
int cmd_check_class(const RunConfig& cfg, std::ostream& out);
int cmd_verify(const std::string& theorem, const RunConfig& cfg, std::ostream& out);
int cmd_extremal(const std::string& mode, const RunConfig& cfg, std::ostream& out);

}  // namespace degseq
