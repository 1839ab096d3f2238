#include "fracsig/io/run_config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "fracsig/errors.hpp"

namespace fracsig::io {

namespace {

struct Entry {
    std::string value;
    std::size_t line;
};

using Section = std::map<std::string, Entry, std::less<>>;

const std::map<std::string, std::set<std::string, std::less<>>, std::less<>> kSchema{
    {"model", {"C", "tau", "D", "H", "V0", "d"}},
    {"stimulus", {"phi0", "t_star", "sigma", "rate", "count", "seed"}},
    {"synthesis",
     {"sample_rate", "duration", "noise_hurst", "noise_amplitude", "rhythm_jitter", "band_low", "band_high",
      "target_frequency", "seed", "mode"}},
    {"analysis", {"q_min", "q_max", "dq", "resolutions", "rs_window", "rs_stride"}},
};

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double to_double(std::string_view text, std::size_t line, std::string_view key) {
    text = trim(text);
    double v = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
        throw ParseError(line, "key '" + std::string(key) + "' expects a finite number, got '" + std::string(text) + "'");
    return v;
}

std::uint64_t to_unsigned(std::string_view text, std::size_t line, std::string_view key) {
    text = trim(text);
    std::uint64_t v = 0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, v);
    if (text.empty() || ec != std::errc() || ptr != end)
        throw ParseError(line, "key '" + std::string(key) + "' expects a non-negative integer, got '" +
                                   std::string(text) + "'");
    return v;
}

std::vector<double> to_list(const Entry& e, std::string_view key) {
    std::vector<double> out;
    std::string_view rest = e.value;
    while (true) {
        const auto comma = rest.find(',');
        out.push_back(to_double(rest.substr(0, comma), e.line, key));
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return out;
}

class Document {
public:
    explicit Document(std::istream& in) {
        std::string raw;
        std::size_t line = 0;
        Section* current = nullptr;
        while (std::getline(in, raw)) {
            ++line;
            std::string_view text = raw;
            if (const auto hash = text.find_first_of("#;"); hash != std::string_view::npos) text = text.substr(0, hash);
            text = trim(text);
            if (text.empty()) continue;
            if (text.front() == '[') {
                if (text.back() != ']') throw ParseError(line, "unterminated section header");
                const auto name = std::string(trim(text.substr(1, text.size() - 2)));
                if (!kSchema.contains(name)) throw ParseError(line, "unknown section [" + name + "]");
                if (sections_.contains(name)) throw ParseError(line, "duplicate section [" + name + "]");
                current = &sections_[name];
                current_name_ = name;
                continue;
            }
            const auto eq = text.find('=');
            if (eq == std::string_view::npos) throw ParseError(line, "expected 'key = value'");
            if (!current) throw ParseError(line, "key outside of any section");
            const auto key = std::string(trim(text.substr(0, eq)));
            const auto value = std::string(trim(text.substr(eq + 1)));
            if (!kSchema.at(current_name_).contains(key))
                throw ParseError(line, "unknown key '" + key + "' in [" + current_name_ + "]");
            if (current->contains(key))
                throw ParseError(line, "duplicate key '" + key + "' in [" + current_name_ + "]");
            if (value.empty()) throw ParseError(line, "key '" + key + "' has no value");
            current->emplace(key, Entry{value, line});
        }
    }

    const Section* section(std::string_view name) const {
        const auto it = sections_.find(name);
        return it == sections_.end() ? nullptr : &it->second;
    }

private:
    std::map<std::string, Section, std::less<>> sections_;
    std::string current_name_;
};

const Entry* find(const Section* s, std::string_view key) {
    if (!s) return nullptr;
    const auto it = s->find(key);
    return it == s->end() ? nullptr : &it->second;
}

std::optional<double> number(const Section* s, std::string_view key) {
    const auto* e = find(s, key);
    if (!e) return std::nullopt;
    return to_double(e->value, e->line, key);
}

std::optional<std::uint64_t> integer(const Section* s, std::string_view key) {
    const auto* e = find(s, key);
    if (!e) return std::nullopt;
    return to_unsigned(e->value, e->line, key);
}

const Entry& required(const Section* s, std::string_view section, std::string_view key) {
    const auto* e = find(s, key);
    if (!e) throw ConfigError("missing required key '" + std::string(key) + "' in [" + std::string(section) + "]");
    return *e;
}

ModelParams read_model(const Section* s, bool& derived) {
    const ModelParams defaults;
    const auto d = integer(s, "d").value_or(static_cast<std::uint64_t>(defaults.d));
    const auto D = number(s, "D");
    derived = !D.has_value();
    try {
        return make_model_params(number(s, "C").value_or(defaults.C), number(s, "tau"), D,
                                 number(s, "H").value_or(defaults.H), number(s, "V0").value_or(defaults.V0),
                                 static_cast<int>(d));
    } catch (const DomainError& e) {
        throw ConfigError(std::string("[model]: ") + e.what());
    }
}

StimulusTrain read_stimulus(const Section* s) {
    if (!s) return {};
    const auto phi0 = to_list(required(s, "stimulus", "phi0"), "phi0");
    const auto sigma = to_list(required(s, "stimulus", "sigma"), "sigma");
    const auto* t_star = find(s, "t_star");
    const auto* rate = find(s, "rate");

    try {
        if (t_star && rate) throw ConfigError("[stimulus]: give either t_star or rate/count, not both");
        if (t_star) {
            const auto times = to_list(*t_star, "t_star");
            auto pick = [&](const std::vector<double>& v, std::string_view key, std::size_t i) {
                if (v.size() == 1) return v.front();
                if (v.size() != times.size())
                    throw ConfigError("[stimulus]: '" + std::string(key) + "' must have 1 or " +
                                      std::to_string(times.size()) + " entries");
                return v[i];
            };
            StimulusTrain train;
            for (std::size_t i = 0; i < times.size(); ++i)
                train.add(GaussianPulse{pick(phi0, "phi0", i), times[i], pick(sigma, "sigma", i)});
            if (find(s, "count") || find(s, "seed"))
                throw ConfigError("[stimulus]: count/seed only apply to generated trains (rate)");
            return train;
        }
        if (!rate) throw ConfigError("missing required key 't_star' (or 'rate') in [stimulus]");
        if (phi0.size() != 1 || sigma.size() != 1)
            throw ConfigError("[stimulus]: generated trains take a single phi0 and sigma");
        const auto r = to_double(rate->value, rate->line, "rate");
        const auto& count = required(s, "stimulus", "count");
        const auto seed = integer(s, "seed").value_or(1);
        return poisson_train(r, to_unsigned(count.value, count.line, "count"), phi0.front(), sigma.front(), seed);
    } catch (const DomainError& e) {
        throw ConfigError(std::string("[stimulus]: ") + e.what());
    }
}

void read_synthesis(const Section* s, SynthesisConfig& cfg) {
    cfg.sample_rate = number(s, "sample_rate").value_or(cfg.sample_rate);
    cfg.duration = number(s, "duration").value_or(cfg.duration);
    cfg.noise_hurst = number(s, "noise_hurst").value_or(cfg.noise_hurst);
    cfg.noise_amplitude = number(s, "noise_amplitude").value_or(cfg.noise_amplitude);
    cfg.rhythm_jitter = number(s, "rhythm_jitter").value_or(cfg.rhythm_jitter);
    cfg.band_low = number(s, "band_low").value_or(cfg.band_low);
    cfg.band_high = number(s, "band_high").value_or(cfg.band_high);
    cfg.target_frequency = number(s, "target_frequency").value_or(cfg.target_frequency);
    cfg.seed = integer(s, "seed").value_or(cfg.seed);
    if (const auto* mode = find(s, "mode")) {
        if (mode->value == "model") cfg.mode = SynthesisMode::model;
        else if (mode->value == "uniform") cfg.mode = SynthesisMode::uniform_surrogate;
        else throw ParseError(mode->line, "mode must be 'model' or 'uniform', got '" + mode->value + "'");
    }
}

AnalysisConfig read_analysis(const Section* s) {
    AnalysisConfig a;
    a.q_min = number(s, "q_min").value_or(a.q_min);
    a.q_max = number(s, "q_max").value_or(a.q_max);
    a.dq = number(s, "dq").value_or(a.dq);
    a.resolutions = static_cast<int>(integer(s, "resolutions").value_or(static_cast<std::uint64_t>(a.resolutions)));
    a.rs_window = integer(s, "rs_window").value_or(a.rs_window);
    a.rs_stride = integer(s, "rs_stride").value_or(a.rs_stride);
    a.validate();
    return a;
}

} // namespace

void AnalysisConfig::validate() const {
    if (!(q_min < q_max)) throw ConfigError("[analysis]: q_min must be below q_max");
    if (!(dq > 0.0)) throw ConfigError("[analysis]: dq must be positive");
    if (resolutions < 5 || resolutions > 40) throw ConfigError("[analysis]: resolutions must be between 5 and 40");
    if (rs_window < 64) throw ConfigError("[analysis]: rs_window must be at least 64");
    if (rs_stride < 1) throw ConfigError("[analysis]: rs_stride must be at least 1");
}

RunConfig parse_run_config(std::istream& in) {
    const Document doc(in);
    RunConfig cfg;
    cfg.synthesis.params = read_model(doc.section("model"), cfg.diffusivity_derived);
    cfg.synthesis.train = read_stimulus(doc.section("stimulus"));
    read_synthesis(doc.section("synthesis"), cfg.synthesis);
    cfg.analysis = read_analysis(doc.section("analysis"));
    cfg.synthesis.validate();
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path.string() + "'");
    return parse_run_config(in);
}

} // namespace fracsig::io
