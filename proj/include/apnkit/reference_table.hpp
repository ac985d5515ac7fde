#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "apnkit/diffspec.hpp"
#include "apnkit/int.hpp"

namespace apnkit::reference_table {

/// One reference row: an APN power-map class over GF(p^n) with its full
/// cyclotomic coset. The expected data is embedded verbatim, never
/// recomputed, so verification genuinely tests the engine against it.
struct TableRow {
    std::string label;
    unsigned long p;
    unsigned n;
    unsigned long d;
    std::vector<unsigned long> coset; // sorted ascending
};

struct RowResult {
    TableRow row;
    std::vector<Int> computed_coset;
    std::uint64_t computed_delta = 0;
    bool pass = false;
};

struct VerificationReport {
    std::vector<RowResult> rows;
    bool overall = false;
};

/// The seven embedded rows, labels "I" .. "VII".
const std::vector<TableRow>& rows();

/// Recomputes coset and differential uniformity for each selected row.
/// only_label filters to one row ("" = all). corrupt_label deliberately
/// perturbs one row's expected coset (negative-control fixture for tests).
VerificationReport verify(const std::string& only_label = "",
                          const std::string& corrupt_label = "");

} // namespace apnkit::reference_table
