#ifndef SPARSEPOLY_REPORT_HPP
#define SPARSEPOLY_REPORT_HPP

// Rendering of the structured results (identity reports, root reports, scan
// tables) to JSON, CSV and plain text. Field order is fixed by construction
// (ordered JSON, fixed CSV header), so a given input renders to identical
// bytes every time.

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "sparsepoly/concavity.hpp"
#include "sparsepoly/identities.hpp"
#include "sparsepoly/roots.hpp"

namespace sparsepoly {

using Json = nlohmann::ordered_json;

// deterministic shortest-roundtrip formatting for doubles
std::string format_double(double x);
std::string format_rational(const Rational& q);

Json to_json(const IdentityReport& r);
Json to_json(const RootReport& r);
Json to_json(const RealRootCount& r);
Json to_json(const ConcavityCertificate& c);
Json to_json(const ParityScan& p);
Json to_json(const ConjectureScanResult& s);

// One row of a scan table; absent fields render as empty CSV cells.
struct ScanRow {
    long m = 0, n = 0;
    std::optional<long> count;
    std::optional<long> period_detected;
    std::optional<double> bound_lower;
    std::optional<double> bound_upper;
    std::optional<double> max_modulus;
    std::optional<double> min_modulus;
};

ScanRow scan_row(const RootReport& r);
std::vector<ScanRow> scan_rows(const ConjectureScanResult& s);

inline constexpr const char* kScanCsvHeader =
    "m,n,count,period_detected,bound_lower,bound_upper,max_modulus,min_modulus";

std::string render_csv(const std::vector<ScanRow>& rows);

// identity suite CSV: one row per check
std::string render_identity_csv(const std::vector<IdentityReport>& reports);

std::string render_text(const std::vector<IdentityReport>& reports);
std::string render_text(const std::vector<ScanRow>& rows);

// Writes to the path, or to stdout when path is empty; IO failures carry the
// path in the exception message.
void write_output(const std::string& path, const std::string& bytes);

}  // namespace sparsepoly

#endif
