#include "splitting/notation.hpp"

#include <cctype>

namespace splitting {

namespace {

class Tokenizer {
public:
    explicit Tokenizer(std::string_view text) : text_(text) {}

    std::vector<UnitToken> run() {
        std::vector<UnitToken> out = terms(/*inside_bracket=*/false);
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
        if (out.empty()) throw ParseError("empty method", pos_);
        return out;
    }

private:
    std::vector<UnitToken> terms(bool inside_bracket) {
        std::vector<UnitToken> out;
        for (;;) {
            skip_space();
            if (pos_ == text_.size()) break;
            char c = text_[pos_];
            if (c == '(') {
                out.push_back(unit());
            } else if (c == '[') {
                std::size_t open = pos_++;
                std::vector<UnitToken> body = terms(true);
                skip_space();
                if (!consume(']')) fail("expected ']'");
                if (body.empty()) throw ParseError("empty bracket group", open);
                std::size_t save = pos_;
                skip_space();
                int k = 1;
                if (consume('^'))
                    k = exponent();
                else
                    pos_ = save;
                for (int i = 0; i < k; ++i) out.insert(out.end(), body.begin(), body.end());
            } else if (c == ']' && inside_bracket) {
                break;
            } else {
                fail("unexpected character '" + std::string(1, c) + "'");
            }
        }
        return out;
    }

    UnitToken unit() {
        consume('(');
        skip_space();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            bool exponent_sign = (c == '-' || c == '+') && pos_ > start && (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E');
            if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/' || c == 'e' || c == 'E' || exponent_sign)
                ++pos_;
            else
                break;
        }
        std::string number(text_.substr(start, pos_ - start));
        if (number.empty() || number == "-" || number == "+") fail("expected a number");
        try {
            if (Coefficient::parse(number).is_zero()) throw ParseError("zero coefficient", start);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), start);
        }
        skip_space();
        if (!consume(')')) fail("expected ')'");
        bool transposed = false;
        std::size_t save = pos_;
        skip_space();
        if (consume('^')) {
            skip_space();
            if (consume('T')) {
                transposed = true;
            } else {
                pos_ = save;
            }
        } else {
            pos_ = save;
        }
        return UnitToken{std::move(number), transposed};
    }

    int exponent() {
        skip_space();
        bool braced = consume('{');
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a positive integer exponent");
        int k = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (k < 1) throw ParseError("exponent must be positive", start);
        if (braced) {
            skip_space();
            if (!consume('}')) fail("expected '}'");
        }
        return k;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

std::vector<UnitToken> tokenize_method(std::string_view text) { return Tokenizer(text).run(); }

Method parse_method(std::string_view text, Target target) {
    std::vector<Unit> units;
    for (const auto& tok : tokenize_method(text)) units.push_back(unit_from_label(Coefficient::parse(tok.number), tok.transposed));
    return Method(std::move(units), target);
}

std::string format_method(const Method& m) {
    std::string out;
    for (const auto& u : m.units()) {
        out += '(';
        out += label_of(u).to_string();
        out += ')';
        if (u.alpha == -1) out += "^T";
    }
    return out;
}

nlohmann::json method_to_json(const Method& m) {
    nlohmann::json units = nlohmann::json::array();
    for (const auto& u : m.units()) units.push_back({{"alpha", u.alpha}, {"a", u.a.to_string()}});
    return units;
}

Method method_from_json(const nlohmann::json& j, Target target) {
    std::vector<Unit> units;
    for (const auto& u : j) units.push_back(make_unit(u.at("alpha").get<int>(), Coefficient::parse(u.at("a").get<std::string>())));
    return Method(std::move(units), target);
}

} // namespace splitting
