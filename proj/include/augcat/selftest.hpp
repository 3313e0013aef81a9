/* Golden and property suite binding the library's invariants to the
 * bundled corpus. Expected values are frozen in source; changing them
 * means editing this module, so they cannot drift silently. */

#pragma once

#include <string>
#include <vector>

namespace augcat {

struct SelftestRecord {
    std::string name;
    std::string basis; // where the expected value comes from
    bool pass = false;
    std::string detail; // diagnostic on failure
};

struct SelftestSummary {
    std::vector<SelftestRecord> records;

    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto& r : records)
            if (!r.pass)
                ++n;
        return n;
    }
};

SelftestSummary run_selftest(const std::string& data_dir, unsigned jobs = 1);

} // namespace augcat
