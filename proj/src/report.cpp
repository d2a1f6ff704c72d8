#include "ladders/report.hpp"

#include <sstream>

namespace ladders {

void Report::fail(std::string claim, std::vector<std::string> elements) {
    ++failures_;
    if (witnesses_.size() < kMaxStored) witnesses_.push_back({std::move(claim), std::move(elements)});
}

void Report::attach(std::string label, std::vector<std::string> elements) {
    evidence_.push_back({std::move(label), std::move(elements)});
}

void Report::note(std::string key, std::string value) {
    notes_.emplace_back(std::move(key), std::move(value));
}

const std::string* Report::find_note(const std::string& key) const {
    for (const auto& [k, v] : notes_)
        if (k == key) return &v;
    return nullptr;
}

void Report::absorb(const Report& other) {
    const std::string prefix = other.title_.empty() ? "" : other.title_ + ": ";
    for (const auto& w : other.witnesses_)
        if (witnesses_.size() < kMaxStored) witnesses_.push_back({prefix + w.claim, w.elements});
    failures_ += other.failures_;
    for (const auto& [k, v] : other.notes_) notes_.emplace_back(prefix + k, v);
}

namespace {
std::string tuple_text(const std::vector<std::string>& xs) {
    std::string out = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ", ";
        out += xs[i];
    }
    return out + ")";
}
}  // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    os << (title_.empty() ? "check" : title_) << ": " << (passed() ? "pass" : "fail") << '\n';
    for (const auto& [k, v] : notes_) os << "  " << k << " = " << v << '\n';
    for (const auto& w : witnesses_) os << "  witness " << w.claim << ' ' << tuple_text(w.elements) << '\n';
    if (failures_ > witnesses_.size())
        os << "  ... " << (failures_ - witnesses_.size()) << " more witnesses\n";
    for (const auto& e : evidence_) os << "  " << e.claim << ' ' << tuple_text(e.elements) << '\n';
    return os.str();
}

}  // namespace ladders
