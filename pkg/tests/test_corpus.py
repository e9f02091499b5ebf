import unicodedata

import pytest
from hypothesis import given, strategies as st

from discnet import (
    DiscourseUnit,
    MatchPolicy,
    load_corpus,
    load_vocabulary,
    match_words,
    occurrence_matrix,
)
from discnet.errors import (
    CorpusFormatError,
    EmptyCorpusError,
    EmptyVocabularyError,
    EncodingError,
    IntegrityError,
)


class TestLoadCorpus:
    def test_minimal_file(self):
        corpus = load_corpus(b"id,agent,text\n1,A,hello\n2,B,world")
        assert len(corpus) == 2
        assert corpus.agents == {"A", "B"}
        assert corpus.units[0].text == "hello"

    def test_duplicate_id_rejected(self):
        with pytest.raises(IntegrityError):
            load_corpus(b"id,agent,text\n1,A,hi\n1,B,again")

    def test_decreasing_id_rejected(self):
        with pytest.raises(IntegrityError):
            load_corpus(b"id,agent,text\n2,A,hi\n1,B,again")

    def test_c1_fixture(self, c1):
        assert len(c1) == 3
        assert c1.agents == {"A", "B"}
        assert c1.agent_order == ("A", "B")
        assert c1.unit_ids == (1, 2, 3)

    def test_missing_header(self):
        with pytest.raises(CorpusFormatError):
            load_corpus(b"agent,text\nA,hello\n")

    def test_missing_column_in_row(self):
        with pytest.raises(CorpusFormatError) as err:
            load_corpus(b"id,agent,text\n1,A\n")
        assert err.value.line == 2

    def test_non_utf8(self):
        with pytest.raises(EncodingError):
            load_corpus(b"id,agent,text\n1,A,\xff\xfe\n")

    def test_group_column(self):
        corpus = load_corpus(b"id,agent,text,group\n1,A,hi,G1\n2,B,yo,\n")
        assert corpus.units[0].group == "G1"
        assert corpus.units[1].group is None

    def test_empty_text_warns_but_loads(self):
        corpus = load_corpus(b"id,agent,text\n1,A,\n2,B,ok\n")
        assert len(corpus) == 2
        assert len(corpus.warnings) == 1
        assert "unit 1" in corpus.warnings[0]

    def test_empty_agent_rejected(self):
        with pytest.raises(IntegrityError):
            load_corpus(b"id,agent,text\n1,,hello\n")

    def test_quoted_fields_rfc4180(self):
        corpus = load_corpus(b'id,agent,text\n1,A,"hello, ""world"""\n')
        assert corpus.units[0].text == 'hello, "world"'

    def test_crlf_and_bom(self):
        corpus = load_corpus("id,agent,text\r\n1,A,hi\r\n".encode("utf-8-sig"))
        assert len(corpus) == 1

    def test_non_positive_id(self):
        with pytest.raises(IntegrityError):
            load_corpus(b"id,agent,text\n0,A,hello\n")

    def test_non_integer_id(self):
        with pytest.raises(CorpusFormatError):
            load_corpus(b"id,agent,text\nx,A,hello\n")

    def test_header_only_gives_empty_corpus(self):
        corpus = load_corpus(b"id,agent,text\n")
        assert len(corpus) == 0

    def test_roundtrip_equality(self, c1):
        from discnet.corpus import dump_corpus

        assert load_corpus(dump_corpus(c1)) == c1

    def test_roundtrip_with_quoting_and_group(self):
        from discnet.corpus import dump_corpus

        corpus = load_corpus(b'id,agent,text,group\n1,A,"hi, ""there""",G1\n2,B,plain,\n')
        again = load_corpus(dump_corpus(corpus))
        assert again == corpus
        assert load_corpus(dump_corpus(again)) == again


class TestLoadVocabulary:
    def test_basic(self):
        vocab = load_vocabulary(b"knowledge\nideas\ndiscussion\n")
        assert vocab.words == ("knowledge", "ideas", "discussion")

    def test_case_fold_dedup(self):
        vocab = load_vocabulary(b"Knowledge\nknowledge\n")
        assert vocab.words == ("knowledge",)

    def test_comments_and_blanks_only(self):
        with pytest.raises(EmptyVocabularyError):
            load_vocabulary(b"# comment\n\n")

    def test_order_preserved_first_kept(self):
        vocab = load_vocabulary(b"zebra\napple\nZEBRA\n")
        assert vocab.words == ("zebra", "apple")

    def test_exact_token_policy_keeps_case(self):
        vocab = load_vocabulary(b"Knowledge\nknowledge\n", MatchPolicy(mode="exact-token"))
        assert vocab.words == ("Knowledge", "knowledge")
        assert vocab.normalized is False


class TestMatchWords:
    def test_u1_matches(self, c1, v1, policy):
        got = match_words(c1.units[0], v1, policy)
        assert got == {v1.index_of("knowledge"), v1.index_of("ideas")}

    def test_case_fold(self, v1, policy):
        unit = DiscourseUnit(unit_id=9, agent="X", text="IDEAS!")
        assert match_words(unit, v1, policy) == {v1.index_of("ideas")}

    def test_no_match(self, v1, policy):
        unit = DiscourseUnit(unit_id=9, agent="X", text="nothing relevant")
        assert match_words(unit, v1, policy) == frozenset()

    def test_exact_token_respects_case(self, v1):
        unit = DiscourseUnit(unit_id=9, agent="X", text="IDEAS here")
        assert match_words(unit, v1, MatchPolicy(mode="exact-token")) == frozenset()

    def test_substring_mode_unsegmented(self):
        vocab = load_vocabulary("知識\n議論\n".encode())
        unit = DiscourseUnit(unit_id=1, agent="X", text="知識構築の議論です")
        got = match_words(unit, vocab, MatchPolicy(mode="substring"))
        assert got == {0, 1}

    def test_substring_not_token_bound(self, v1):
        unit = DiscourseUnit(unit_id=1, agent="X", text="ideasplosion")
        assert match_words(unit, v1, MatchPolicy(mode="substring")) == {v1.index_of("ideas")}
        assert match_words(unit, v1, MatchPolicy()) == frozenset()

    def test_empty_vocab_rejected(self, policy):
        from discnet import Vocabulary

        unit = DiscourseUnit(unit_id=1, agent="X", text="hi")
        with pytest.raises(EmptyVocabularyError):
            match_words(unit, Vocabulary(words=()), policy)

    @given(st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=40))
    def test_unicode_normalization_invariance(self, text):
        vocab = load_vocabulary(b"ideas\nknowledge\nfi\n")
        policy = MatchPolicy()
        unit_nfc = DiscourseUnit(unit_id=1, agent="X", text=unicodedata.normalize("NFC", text))
        unit_nfd = DiscourseUnit(unit_id=1, agent="X", text=unicodedata.normalize("NFD", text))
        assert match_words(unit_nfc, vocab, policy) == match_words(unit_nfd, vocab, policy)


class TestOccurrenceMatrix:
    def test_c1_rows(self, c1_matrix, v1):
        k, i, d = (v1.index_of(w) for w in ("knowledge", "ideas", "discussion"))
        assert c1_matrix.rows == (frozenset({k, i}), frozenset({i, d}), frozenset({d, k}))

    def test_pointwise_agreement_with_matcher(self, c1, v1, policy, c1_matrix):
        for pos, unit in enumerate(c1.units):
            expected = match_words(unit, v1, policy)
            for w in range(len(v1)):
                assert c1_matrix.cell(pos, w) == (w in expected)

    def test_all_false(self, policy):
        corpus = load_corpus(b"id,agent,text\n1,A,zilch\n2,B,nada\n")
        vocab = load_vocabulary(b"knowledge\n")
        matrix = occurrence_matrix(corpus, vocab, policy)
        assert matrix.incidence_count == 0

    def test_all_true_row(self, v1, policy):
        corpus = load_corpus(b"id,agent,text\n1,A,knowledge ideas discussion\n")
        matrix = occurrence_matrix(corpus, v1, policy)
        assert matrix.rows[0] == frozenset({0, 1, 2})

    def test_empty_corpus_rejected(self, v1, policy):
        corpus = load_corpus(b"id,agent,text\n")
        with pytest.raises(EmptyCorpusError):
            occurrence_matrix(corpus, v1, policy)

    def test_deterministic(self, c1, v1, policy):
        assert occurrence_matrix(c1, v1, policy) == occurrence_matrix(c1, v1, policy)

    def test_dimensions(self, c1_matrix):
        assert c1_matrix.n_units == 3
        assert c1_matrix.n_words == 3
        assert len(c1_matrix.dense()) == 3
