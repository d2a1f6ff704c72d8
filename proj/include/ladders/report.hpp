#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ladders {

struct Witness {
    std::string claim;
    std::vector<std::string> elements;
};

// Pass/fail verdict of a checker. A failing report always holds at least one
// witness; only the first kMaxStored witnesses are kept, the rest are counted.
class Report {
public:
    static constexpr std::size_t kMaxStored = 64;

    Report() = default;
    explicit Report(std::string title) : title_(std::move(title)) {}

    void fail(std::string claim, std::vector<std::string> elements = {});
    void attach(std::string label, std::vector<std::string> elements);
    void note(std::string key, std::string value);

    // Folds another report in; its witnesses are prefixed with its title.
    void absorb(const Report& other);

    bool passed() const { return failures_ == 0; }
    explicit operator bool() const { return passed(); }

    const std::string& title() const { return title_; }
    void set_title(std::string t) { title_ = std::move(t); }
    const std::vector<Witness>& witnesses() const { return witnesses_; }
    std::size_t failure_count() const { return failures_; }
    const std::vector<Witness>& evidence() const { return evidence_; }
    const std::vector<std::pair<std::string, std::string>>& notes() const { return notes_; }
    const std::string* find_note(const std::string& key) const;

    std::string to_text() const;

private:
    std::string title_;
    std::vector<Witness> witnesses_;
    std::size_t failures_ = 0;
    std::vector<Witness> evidence_;
    std::vector<std::pair<std::string, std::string>> notes_;
};

}  // namespace ladders
