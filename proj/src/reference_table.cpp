#include "apnkit/reference_table.hpp"

#include <algorithm>
#include <map>

#include "apnkit/errors.hpp"
#include "apnkit/ffield.hpp"

namespace apnkit::reference_table {

const std::vector<TableRow>& rows() {
    static const std::vector<TableRow> table = {
        {"I", 3, 5, 134, {134, 160, 206, 230, 238}},
        {"II", 3, 5, 152, {152, 158, 212, 214, 232}},
        {"III", 3, 7, 40, {40, 120, 360, 742, 976, 1054, 1080}},
        {"IV", 3, 7, 224, {224, 656, 672, 1532, 1676, 1968, 2016}},
        {"V", 3, 7, 274, {274, 280, 334, 820, 822, 840, 1002}},
        {"VI", 5, 3, 14, {14, 70, 102}},
        {"VII", 5, 5, 843, {843, 1091, 2043, 2283, 2331}},
    };
    return table;
}

VerificationReport verify(const std::string& only_label, const std::string& corrupt_label) {
    std::vector<TableRow> selected;
    for (const TableRow& row : rows()) {
        if (!only_label.empty() && row.label != only_label) continue;
        selected.push_back(row);
        if (row.label == corrupt_label) selected.back().coset.back() += 1;
    }
    if (selected.empty()) throw ParameterError("unknown row label: " + only_label);

    VerificationReport report;
    report.overall = true;
    std::map<std::pair<unsigned long, unsigned>, ffield::Field> fields;
    for (const TableRow& row : selected) {
        const auto key = std::make_pair(row.p, row.n);
        auto it = fields.find(key);
        if (it == fields.end())
            it = fields.emplace(key, ffield::Field(row.p, row.n)).first;

        RowResult res;
        res.row = row;
        const diffspec::ExponentClass cls = diffspec::cyclotomic_coset(row.p, row.n, Int(row.d));
        res.computed_coset = cls.coset;
        res.computed_delta = diffspec::delta(it->second, Int(row.d));

        std::vector<Int> expected(row.coset.begin(), row.coset.end());
        std::sort(expected.begin(), expected.end());
        res.pass = (res.computed_coset == expected) && (res.computed_delta == 2);
        report.overall = report.overall && res.pass;
        report.rows.push_back(std::move(res));
    }
    return report;
}

} // namespace apnkit::reference_table
