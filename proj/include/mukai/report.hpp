#pragma once

#include <cstddef>
#include <optional>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace mukai {

struct check_failure {
    std::string case_description;
    std::string lhs;
    std::string rhs;
};

/// Outcome of a verification sweep: how many identities were checked and the first one that failed.
struct check_report {
    std::string check;
    std::vector<std::string> space_names;
    std::string kernel_description;
    std::size_t cases_total = 0;
    std::size_t cases_failed = 0;
    std::optional<check_failure> first_failure;

    bool passed() const noexcept { return cases_failed == 0; }

    /// Count one case; lhs/rhs are rendered lazily only when the case fails.
    template <class Lhs, class Rhs, class Describe>
    bool expect_equal(const Lhs& lhs, const Rhs& rhs, Describe&& describe)
    {
        ++cases_total;
        if (lhs == rhs) return true;
        ++cases_failed;
        if (!first_failure) first_failure = check_failure{describe(), to_text(lhs), to_text(rhs)};
        return false;
    }

    void merge(const check_report& other)
    {
        cases_total += other.cases_total;
        cases_failed += other.cases_failed;
        if (!first_failure && other.first_failure) first_failure = other.first_failure;
    }

    nlohmann::ordered_json to_json() const
    {
        nlohmann::ordered_json j;
        j["check"] = check;
        j["space_names"] = space_names;
        j["kernel_description"] = kernel_description;
        j["cases_total"] = cases_total;
        j["cases_failed"] = cases_failed;
        if (first_failure)
            j["first_failure"] = {{"case", first_failure->case_description},
                                  {"lhs", first_failure->lhs},
                                  {"rhs", first_failure->rhs}};
        else
            j["first_failure"] = nullptr;
        return j;
    }

private:
    template <class T>
    static std::string to_text(const T& v)
    {
        if constexpr (std::is_convertible_v<T, std::string>)
            return std::string(v);
        else
            return v.str();
    }
};

} // namespace mukai
