#ifndef HIJAC_REPORT_HPP
#define HIJAC_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace hijac {

enum class CheckStatus { PASS, FAIL, UNDECIDED, NOT_APPLICABLE };

std::string to_string(CheckStatus s);

struct CheckItem {
    std::string name;
    CheckStatus status = CheckStatus::PASS;
    std::string detail;  // offending polynomial or explanation on failure
};

/** Structured result of a named verification with per-subcheck outcomes. */
struct Report {
    std::string title;
    std::vector<CheckItem> items;
    bool truncated_mode = false;
    // free-form facts (exponents, dimensions) consumed by callers
    std::vector<std::pair<std::string, std::string>> facts;

    void add(const std::string& name, bool ok, const std::string& detail = "");
    void add(const std::string& name, CheckStatus st, const std::string& detail = "");
    void fact(const std::string& key, const std::string& value);
    std::string get_fact(const std::string& key) const;

    CheckStatus overall() const;
    bool passed() const { return overall() == CheckStatus::PASS; }
    std::string text() const;
};

}  // namespace hijac

#endif
