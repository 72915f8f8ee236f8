// SPDX-License-Identifier: Apache-2.0
#include "deltaarc/parse.hpp"

#include <array>
#include <cctype>

namespace deltaarc {

namespace {

constexpr std::array<const char*, 13> kKeywords = {
    "component", "autoconnect", "port",   "in",  "out",    "connect",     "disconnect",
    "delta",     "after",       "modify", "add", "remove", "deltaconfig"};

bool is_keyword(const std::string& word) {
    for (const char* kw : kKeywords)
        if (word == kw) return true;
    return false;
}

struct Token {
    enum class Kind { Identifier, Keyword, Symbol, End };
    Kind kind = Kind::End;
    std::string text;
    SourcePosition position;
};

class Lexer {
public:
    Lexer(const std::string& source, std::string origin)
        : source_(source), origin_(std::move(origin)) {
        advance();
    }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& expected) const {
        throw ParseError(current_.position, expected,
                         current_.kind == Token::Kind::End ? "end of input"
                                                           : "'" + current_.text + "'");
    }

    [[noreturn]] void fail_at(const SourcePosition& pos, const std::string& expected,
                              const std::string& found) const {
        throw ParseError(pos, expected, found);
    }

    Token expect_symbol(const std::string& sym) {
        if (current_.kind != Token::Kind::Symbol || current_.text != sym) fail("'" + sym + "'");
        return take();
    }

    Token expect_keyword(const std::string& kw) {
        if (current_.kind != Token::Kind::Keyword || current_.text != kw) fail("'" + kw + "'");
        return take();
    }

    Token expect_identifier(const std::string& what) {
        if (current_.kind != Token::Kind::Identifier) fail(what);
        return take();
    }

    bool at_keyword(const std::string& kw) const {
        return current_.kind == Token::Kind::Keyword && current_.text == kw;
    }

    bool at_symbol(const std::string& sym) const {
        return current_.kind == Token::Kind::Symbol && current_.text == sym;
    }

    bool at_end() const { return current_.kind == Token::Kind::End; }

private:
    void advance() {
        skip_trivia();
        current_.position = {origin_, line_, column_};
        if (pos_ >= source_.size()) {
            current_ = {Token::Kind::End, "", current_.position};
            return;
        }
        char c = source_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string word;
            while (pos_ < source_.size() &&
                   (std::isalnum(static_cast<unsigned char>(source_[pos_])) ||
                    source_[pos_] == '_'))
                word += get();
            current_.kind = is_keyword(word) ? Token::Kind::Keyword : Token::Kind::Identifier;
            current_.text = std::move(word);
            return;
        }
        if (c == '-' && pos_ + 1 < source_.size() && source_[pos_ + 1] == '>') {
            get();
            get();
            current_ = {Token::Kind::Symbol, "->", current_.position};
            return;
        }
        if (c == '{' || c == '}' || c == ';' || c == ',' || c == '.' || c == '!') {
            current_ = {Token::Kind::Symbol, std::string(1, get()), current_.position};
            return;
        }
        throw ParseError(current_.position, "a token", "'" + std::string(1, c) + "'");
    }

    void skip_trivia() {
        while (pos_ < source_.size()) {
            char c = source_[pos_];
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else if (c == '/' && pos_ + 1 < source_.size() && source_[pos_ + 1] == '/') {
                while (pos_ < source_.size() && source_[pos_] != '\n') get();
            } else {
                break;
            }
        }
    }

    char get() {
        char c = source_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    const std::string& source_;
    std::string origin_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    Token current_;
};

PortDirection parse_direction(Lexer& lex) {
    if (lex.at_keyword("in")) {
        lex.take();
        return PortDirection::In;
    }
    if (lex.at_keyword("out")) {
        lex.take();
        return PortDirection::Out;
    }
    lex.fail("'in' or 'out'");
}

EndpointRef parse_endpoint(Lexer& lex) {
    Token first = lex.expect_identifier("an endpoint");
    if (lex.at_symbol(".")) {
        lex.take();
        Token port = lex.expect_identifier("a port name");
        return EndpointRef::qualified(first.text, port.text);
    }
    return EndpointRef::local(first.text);
}

Connector parse_connector(Lexer& lex) {
    SourcePosition start = lex.peek().position;
    EndpointRef source = parse_endpoint(lex);
    lex.expect_symbol("->");
    EndpointRef target = parse_endpoint(lex);
    if (source == target)
        lex.fail_at(start, "distinct connector endpoints", "'" + to_string(source) + "' twice");
    return {std::move(source), std::move(target)};
}

ComponentType parse_component(Lexer& lex) {
    lex.expect_keyword("component");
    ComponentType comp;
    comp.name = lex.expect_identifier("a component name").text;
    lex.expect_symbol("{");

    if (lex.at_keyword("autoconnect")) {
        lex.take();
        lex.expect_keyword("port");
        lex.expect_symbol(";");
        comp.autoconnect_ports = true;
    }
    auto check_fresh = [&](const Token& name_token) {
        if (comp.find_port(name_token.text) || comp.find_subcomponent(name_token.text))
            lex.fail_at(name_token.position, "a fresh name",
                        "duplicate name '" + name_token.text + "'");
    };
    while (lex.at_keyword("port")) {
        lex.take();
        while (true) {
            PortDirection dir = parse_direction(lex);
            Token type = lex.expect_identifier("a port data type");
            Token name = lex.expect_identifier("a port name");
            check_fresh(name);
            comp.ports.push_back({name.text, type.text, dir});
            if (lex.at_symbol(",")) {
                lex.take();
                continue;
            }
            lex.expect_symbol(";");
            break;
        }
    }
    while (lex.at_keyword("component")) {
        lex.take();
        Token type = lex.expect_identifier("a component type name");
        Token name = lex.expect_identifier("a subcomponent name");
        check_fresh(name);
        comp.subcomponents.push_back({name.text, type.text});
        lex.expect_symbol(";");
    }
    while (lex.at_keyword("connect")) {
        lex.take();
        comp.connectors.push_back(parse_connector(lex));
        lex.expect_symbol(";");
    }
    lex.expect_symbol("}");
    return comp;
}

DeltaOp parse_delta_op(Lexer& lex) {
    if (lex.at_keyword("add")) {
        lex.take();
        if (lex.at_keyword("port")) {
            lex.take();
            PortDirection dir = parse_direction(lex);
            Token type = lex.expect_identifier("a port data type");
            Token name = lex.expect_identifier("a port name");
            lex.expect_symbol(";");
            return AddPort{{name.text, type.text, dir}};
        }
        lex.expect_keyword("component");
        Token type = lex.expect_identifier("a component type name");
        Token name = lex.expect_identifier("a subcomponent name");
        lex.expect_symbol(";");
        return AddSubcomponent{{name.text, type.text}};
    }
    if (lex.at_keyword("remove")) {
        lex.take();
        if (lex.at_keyword("port")) {
            lex.take();
            Token name = lex.expect_identifier("a port name");
            lex.expect_symbol(";");
            return RemovePort{name.text};
        }
        lex.expect_keyword("component");
        Token name = lex.expect_identifier("a subcomponent name");
        lex.expect_symbol(";");
        return RemoveSubcomponent{name.text};
    }
    if (lex.at_keyword("connect")) {
        lex.take();
        Connector c = parse_connector(lex);
        lex.expect_symbol(";");
        return Connect{std::move(c)};
    }
    if (lex.at_keyword("disconnect")) {
        lex.take();
        Connector c = parse_connector(lex);
        lex.expect_symbol(";");
        return Disconnect{std::move(c)};
    }
    lex.fail("a delta operation");
}

DeltaModel parse_delta_model(Lexer& lex) {
    lex.expect_keyword("delta");
    DeltaModel model;
    model.name = lex.expect_identifier("a delta name").text;

    if (lex.at_keyword("after")) {
        lex.take();
        while (true) {
            bool negated = false;
            if (lex.at_symbol("!")) {
                lex.take();
                negated = true;
            }
            Token ref = lex.expect_identifier("a delta reference");
            if (ref.text == model.name)
                lex.fail_at(ref.position, "a reference to another delta",
                            "self-reference '" + ref.text + "'");
            auto& mine = negated ? model.constraint.forbidden_before
                                 : model.constraint.required_before;
            auto& other = negated ? model.constraint.required_before
                                  : model.constraint.forbidden_before;
            if (other.contains(ref.text))
                lex.fail_at(ref.position, "a consistent delta reference",
                            "'" + ref.text + "' referenced both plain and negated");
            mine.insert(ref.text);
            if (lex.at_symbol(",")) {
                lex.take();
                continue;
            }
            break;
        }
    }

    lex.expect_symbol("{");
    while (lex.at_keyword("modify")) {
        lex.take();
        lex.expect_keyword("component");
        ModifyBlock block;
        block.component = lex.expect_identifier("a component name").text;
        lex.expect_symbol("{");
        while (!lex.at_symbol("}")) block.ops.push_back(parse_delta_op(lex));
        lex.expect_symbol("}");
        model.blocks.push_back(std::move(block));
    }
    lex.expect_symbol("}");
    return model;
}

ProductConfiguration parse_config_model(Lexer& lex) {
    lex.expect_keyword("deltaconfig");
    ProductConfiguration config;
    config.name = lex.expect_identifier("a configuration name").text;
    lex.expect_symbol("{");
    if (!lex.at_symbol("}")) {
        while (true) {
            Token name = lex.expect_identifier("a delta name");
            for (const std::string& existing : config.deltas)
                if (existing == name.text)
                    lex.fail_at(name.position, "a fresh delta name",
                                "duplicate '" + name.text + "'");
            config.deltas.push_back(name.text);
            if (lex.at_symbol(",")) {
                lex.take();
                continue;
            }
            break;
        }
    }
    lex.expect_symbol("}");
    return config;
}

void expect_end(Lexer& lex) {
    if (!lex.at_end()) lex.fail("end of input");
}

}  // namespace

ComponentType parse_architecture(const std::string& source, const std::string& origin) {
    Lexer lex(source, origin);
    ComponentType comp = parse_component(lex);
    expect_end(lex);
    return comp;
}

std::vector<ComponentType> parse_components(const std::string& source, const std::string& origin) {
    Lexer lex(source, origin);
    std::vector<ComponentType> out;
    while (!lex.at_end()) out.push_back(parse_component(lex));
    return out;
}

DeltaModel parse_delta(const std::string& source, const std::string& origin) {
    Lexer lex(source, origin);
    DeltaModel model = parse_delta_model(lex);
    expect_end(lex);
    return model;
}

ProductConfiguration parse_config(const std::string& source, const std::string& origin) {
    Lexer lex(source, origin);
    ProductConfiguration config = parse_config_model(lex);
    expect_end(lex);
    return config;
}

}  // namespace deltaarc
