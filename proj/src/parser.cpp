#include "ska/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ska {

namespace {

struct Token {
    enum class Kind { number, name, plus, minus, star, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
};

class Lexer {
public:
    Lexer(const std::string& s, int line) : s_(s), line_(line) { advance(); }

    const Token& peek() const { return tok_; }
    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ >= s_.size()) {
            tok_ = {Token::Kind::end, ""};
            return;
        }
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i_;
            while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            // a fraction literal a/b is one token
            if (j < s_.size() && s_[j] == '/' && j + 1 < s_.size() &&
                std::isdigit(static_cast<unsigned char>(s_[j + 1]))) {
                ++j;
                while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
            }
            tok_ = {Token::Kind::number, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i_;
            while (j < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
                ++j;
            tok_ = {Token::Kind::name, s_.substr(i_, j - i_)};
            i_ = j;
            return;
        }
        ++i_;
        switch (c) {
            case '+': tok_ = {Token::Kind::plus, "+"}; return;
            case '-': tok_ = {Token::Kind::minus, "-"}; return;
            case '*': tok_ = {Token::Kind::star, "*"}; return;
            case '^': tok_ = {Token::Kind::caret, "^"}; return;
            case '(': tok_ = {Token::Kind::lparen, "("}; return;
            case ')': tok_ = {Token::Kind::rparen, ")"}; return;
            default: throw ParseError(std::string("unexpected character '") + c + "'", line_);
        }
    }

    const std::string& s_;
    int line_;
    size_t i_ = 0;
    Token tok_;
};

class ExprParser {
public:
    ExprParser(const std::string& s, const RingPtr& ring, int line)
        : lex_(s, line), ring_(ring), line_(line) {}

    Polynomial parse() {
        Polynomial p = expr();
        if (lex_.peek().kind != Token::Kind::end)
            throw ParseError("trailing input '" + lex_.peek().text + "'", line_);
        return p;
    }

private:
    Polynomial expr() {
        bool neg = false;
        if (lex_.peek().kind == Token::Kind::plus) lex_.take();
        else if (lex_.peek().kind == Token::Kind::minus) {
            lex_.take();
            neg = true;
        }
        Polynomial acc = term();
        if (neg) acc = -acc;
        while (true) {
            auto k = lex_.peek().kind;
            if (k == Token::Kind::plus) {
                lex_.take();
                acc = acc + term();
            } else if (k == Token::Kind::minus) {
                lex_.take();
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (lex_.peek().kind == Token::Kind::star) {
            lex_.take();
            acc = acc * factor();
        }
        return acc;
    }

    Polynomial factor() {
        Polynomial b = base();
        if (lex_.peek().kind == Token::Kind::caret) {
            lex_.take();
            Token e = lex_.take();
            if (e.kind != Token::Kind::number || e.text.find('/') != std::string::npos)
                throw ParseError("exponent must be a natural number", line_);
            unsigned long n = std::stoul(e.text);
            Polynomial acc = Polynomial::constant(ring_, ring_->field().one());
            for (unsigned long i = 0; i < n; ++i) acc = acc * b;
            return acc;
        }
        return b;
    }

    Polynomial base() {
        Token t = lex_.take();
        switch (t.kind) {
            case Token::Kind::number: {
                auto slash = t.text.find('/');
                Scalar c = slash == std::string::npos
                               ? ring_->field().from_fraction(t.text, "1")
                               : ring_->field().from_fraction(t.text.substr(0, slash),
                                                              t.text.substr(slash + 1));
                return Polynomial::constant(ring_, c);
            }
            case Token::Kind::name: {
                int v = ring_->index_of(t.text);
                if (v < 0) throw ParseError("unknown variable '" + t.text + "'", line_);
                return Polynomial::variable(ring_, static_cast<size_t>(v));
            }
            case Token::Kind::lparen: {
                Polynomial p = expr();
                if (lex_.take().kind != Token::Kind::rparen) throw ParseError("expected ')'", line_);
                return p;
            }
            case Token::Kind::minus:
                return -factor();
            default:
                throw ParseError("unexpected token '" + t.text + "'", line_);
        }
    }

    Lexer lex_;
    RingPtr ring_;
    int line_;
};

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string strip_comment(const std::string& line) {
    auto h = line.find('#');
    return strip(h == std::string::npos ? line : line.substr(0, h));
}

std::vector<std::string> split_names(const std::string& s, int line_no) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (item.empty()) throw ParseError("empty variable name in list", line_no);
        out.push_back(item);
    }
    if (out.empty()) throw ParseError("no variables declared", line_no);
    return out;
}

struct HeaderResult {
    RingPtr ring;
    std::vector<Polynomial> polys;
};

HeaderResult parse_with_header(const std::string& text, const std::string& header_key) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    std::vector<std::string> vars;
    bool have_vars = false;
    Field field = Field::rationals();
    bool have_field = false;
    RingPtr ring;
    std::vector<Polynomial> polys;
    while (std::getline(in, line)) {
        ++line_no;
        std::string s = strip_comment(line);
        if (s.empty()) continue;
        if (!have_vars) {
            if (s.rfind(header_key + ":", 0) != 0)
                throw ParseError("expected '" + header_key + ": ...' header", line_no);
            vars = split_names(s.substr(header_key.size() + 1), line_no);
            have_vars = true;
            continue;
        }
        if (!have_field) {
            if (s.rfind("field:", 0) != 0)
                throw ParseError("expected 'field: QQ' or 'field: GF(p)'", line_no);
            field = parse_field_tag(strip(s.substr(6)));
            have_field = true;
            ring = make_ring(vars, field);
            continue;
        }
        polys.push_back(parse_polynomial(s, ring, line_no));
    }
    if (!have_vars) throw ParseError("missing '" + header_key + ":' header", line_no);
    if (!have_field) throw ParseError("missing 'field:' header", line_no);
    return {ring, std::move(polys)};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring, int line_no) {
    return ExprParser(text, ring, line_no).parse();
}

Field parse_field_tag(const std::string& tag) {
    if (tag == "QQ") return Field::rationals();
    if (tag.rfind("GF(", 0) == 0 && tag.back() == ')') {
        std::string inner = tag.substr(3, tag.size() - 4);
        return Field::prime(std::stoull(inner));
    }
    throw std::invalid_argument("unknown field tag '" + tag + "' (use QQ or GF(p))");
}

IdealPresentation parse_ideal_text(const std::string& text) {
    HeaderResult h = parse_with_header(text, "vars");
    return IdealPresentation(h.ring, std::move(h.polys));
}

DualModuleText parse_dual_text(const std::string& text) {
    HeaderResult h = parse_with_header(text, "dualvars");
    return DualModuleText{h.ring, std::move(h.polys)};
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace ska
