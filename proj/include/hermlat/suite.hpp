#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hermlat {

struct SuiteItem {
    std::string id;
    std::string claim;
    bool pass = false;
    std::string evidence;
};

struct SuiteReport {
    std::vector<SuiteItem> items;  // sorted by id
    bool pass = false;
};

SuiteReport paper_suite(int bound);

nlohmann::json suite_to_json(const SuiteReport& r);
std::string suite_to_text(const SuiteReport& r);

}  // namespace hermlat
