//! Porter stemmer, following the original algorithm and the reference C
//! implementation's two departures: step 2 uses BLI -> BLE (instead of
//! ABLI -> ABLE) and adds LOGI -> LOG.
//!
//! Words shorter than 3 characters pass through unchanged, as do tokens
//! containing anything but lowercase ASCII letters.

/// Stems one lowercase word.
pub fn stem(word: &str) -> String {
    if word.len() <= 2 || !word.bytes().all(|b| b.is_ascii_lowercase()) {
        return word.to_string();
    }
    let mut s = Stemmer {
        b: word.as_bytes().to_vec(),
        j: 0,
    };
    s.step1ab();
    s.step1c();
    s.step2();
    s.step3();
    s.step4();
    s.step5();
    String::from_utf8(s.b).expect("buffer stays ASCII")
}

/// Working buffer plus the stem length `j` set by the last suffix match.
struct Stemmer {
    b: Vec<u8>,
    j: usize,
}

impl Stemmer {
    fn is_consonant(&self, i: usize) -> bool {
        match self.b[i] {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => i == 0 || !self.is_consonant(i - 1),
            _ => true,
        }
    }

    /// The measure m of b[0..len]: the number of vowel-to-consonant
    /// transitions, i.e. m in the form [C](VC)^m[V].
    fn measure_prefix(&self, len: usize) -> usize {
        let mut n = 0;
        let mut i = 0;
        while i < len && self.is_consonant(i) {
            i += 1;
        }
        loop {
            while i < len && !self.is_consonant(i) {
                i += 1;
            }
            if i == len {
                return n;
            }
            n += 1;
            while i < len && self.is_consonant(i) {
                i += 1;
            }
            if i == len {
                return n;
            }
        }
    }

    fn measure(&self) -> usize {
        self.measure_prefix(self.j)
    }

    fn vowel_in_stem(&self) -> bool {
        (0..self.j).any(|i| !self.is_consonant(i))
    }

    /// True if b[0..at] ends in a doubled consonant.
    fn double_consonant(&self, at: usize) -> bool {
        at >= 2 && self.b[at - 1] == self.b[at - 2] && self.is_consonant(at - 1)
    }

    /// True if b[0..at] ends consonant-vowel-consonant with the final
    /// consonant not w, x or y; such stems take back an e.
    fn ends_cvc(&self, at: usize) -> bool {
        if at < 3
            || !self.is_consonant(at - 1)
            || self.is_consonant(at - 2)
            || !self.is_consonant(at - 3)
        {
            return false;
        }
        !matches!(self.b[at - 1], b'w' | b'x' | b'y')
    }

    /// Suffix match; on success records the stem length in `j`.
    fn ends(&mut self, suffix: &[u8]) -> bool {
        if self.b.ends_with(suffix) {
            self.j = self.b.len() - suffix.len();
            true
        } else {
            false
        }
    }

    /// Replaces the matched suffix with `s`.
    fn set_to(&mut self, s: &[u8]) {
        self.b.truncate(self.j);
        self.b.extend_from_slice(s);
    }

    /// Replaces the matched suffix when the stem has positive measure.
    fn replace(&mut self, s: &[u8]) {
        if self.measure() > 0 {
            self.set_to(s);
        }
    }

    fn chop(&mut self, count: usize) {
        self.b.truncate(self.b.len() - count);
    }

    /// Plurals and -ed/-ing.
    fn step1ab(&mut self) {
        if self.b.last() == Some(&b's') {
            if self.ends(b"sses") {
                self.chop(2);
            } else if self.ends(b"ies") {
                self.set_to(b"i");
            } else if self.b.len() >= 2 && self.b[self.b.len() - 2] != b's' {
                self.chop(1);
            }
        }
        if self.ends(b"eed") {
            if self.measure() > 0 {
                self.chop(1);
            }
        } else if (self.ends(b"ed") || self.ends(b"ing")) && self.vowel_in_stem() {
            self.b.truncate(self.j);
            if self.ends(b"at") {
                self.set_to(b"ate");
            } else if self.ends(b"bl") {
                self.set_to(b"ble");
            } else if self.ends(b"iz") {
                self.set_to(b"ize");
            } else if self.double_consonant(self.b.len()) {
                if !matches!(self.b.last(), Some(b'l') | Some(b's') | Some(b'z')) {
                    self.chop(1);
                }
            } else if self.measure_prefix(self.b.len()) == 1 && self.ends_cvc(self.b.len()) {
                self.set_to(b"e");
            }
        }
    }

    /// Terminal y to i when the stem holds a vowel.
    fn step1c(&mut self) {
        if self.ends(b"y") && self.vowel_in_stem() {
            *self.b.last_mut().expect("nonempty after match") = b'i';
        }
    }

    /// Double suffixes to single ones, keyed on the penultimate letter.
    fn step2(&mut self) {
        if self.b.len() < 2 {
            return;
        }
        match self.b[self.b.len() - 2] {
            b'a' => {
                if self.ends(b"ational") {
                    self.replace(b"ate");
                } else if self.ends(b"tional") {
                    self.replace(b"tion");
                }
            }
            b'c' => {
                if self.ends(b"enci") {
                    self.replace(b"ence");
                } else if self.ends(b"anci") {
                    self.replace(b"ance");
                }
            }
            b'e' => {
                if self.ends(b"izer") {
                    self.replace(b"ize");
                }
            }
            b'l' => {
                if self.ends(b"bli") {
                    self.replace(b"ble");
                } else if self.ends(b"alli") {
                    self.replace(b"al");
                } else if self.ends(b"entli") {
                    self.replace(b"ent");
                } else if self.ends(b"eli") {
                    self.replace(b"e");
                } else if self.ends(b"ousli") {
                    self.replace(b"ous");
                }
            }
            b'o' => {
                if self.ends(b"ization") {
                    self.replace(b"ize");
                } else if self.ends(b"ation") {
                    self.replace(b"ate");
                } else if self.ends(b"ator") {
                    self.replace(b"ate");
                }
            }
            b's' => {
                if self.ends(b"alism") {
                    self.replace(b"al");
                } else if self.ends(b"iveness") {
                    self.replace(b"ive");
                } else if self.ends(b"fulness") {
                    self.replace(b"ful");
                } else if self.ends(b"ousness") {
                    self.replace(b"ous");
                }
            }
            b't' => {
                if self.ends(b"aliti") {
                    self.replace(b"al");
                } else if self.ends(b"iviti") {
                    self.replace(b"ive");
                } else if self.ends(b"biliti") {
                    self.replace(b"ble");
                }
            }
            b'g' => {
                if self.ends(b"logi") {
                    self.replace(b"log");
                }
            }
            _ => {}
        }
    }

    /// -ic-, -full, -ness and friends.
    fn step3(&mut self) {
        match self.b.last() {
            Some(b'e') => {
                if self.ends(b"icate") {
                    self.replace(b"ic");
                } else if self.ends(b"ative") {
                    self.replace(b"");
                } else if self.ends(b"alize") {
                    self.replace(b"al");
                }
            }
            Some(b'i') => {
                if self.ends(b"iciti") {
                    self.replace(b"ic");
                }
            }
            Some(b'l') => {
                if self.ends(b"ical") {
                    self.replace(b"ic");
                } else if self.ends(b"ful") {
                    self.replace(b"");
                }
            }
            Some(b's') => {
                if self.ends(b"ness") {
                    self.replace(b"");
                }
            }
            _ => {}
        }
    }

    /// Drops -ant, -ence etc. from stems with measure above 1.
    fn step4(&mut self) {
        if self.b.len() < 2 {
            return;
        }
        let matched = match self.b[self.b.len() - 2] {
            b'a' => self.ends(b"al"),
            b'c' => self.ends(b"ance") || self.ends(b"ence"),
            b'e' => self.ends(b"er"),
            b'i' => self.ends(b"ic"),
            b'l' => self.ends(b"able") || self.ends(b"ible"),
            b'n' => {
                self.ends(b"ant")
                    || self.ends(b"ement")
                    || self.ends(b"ment")
                    || self.ends(b"ent")
            }
            b'o' => {
                (self.ends(b"ion")
                    && self.j >= 1
                    && matches!(self.b[self.j - 1], b's' | b't'))
                    || self.ends(b"ou")
            }
            b's' => self.ends(b"ism"),
            b't' => self.ends(b"ate") || self.ends(b"iti"),
            b'u' => self.ends(b"ous"),
            b'v' => self.ends(b"ive"),
            b'z' => self.ends(b"ize"),
            _ => false,
        };
        if matched && self.measure() > 1 {
            self.b.truncate(self.j);
        }
    }

    /// Final -e removal and -ll reduction.
    fn step5(&mut self) {
        if self.b.last() == Some(&b'e') {
            let a = self.measure_prefix(self.b.len());
            if a > 1 || (a == 1 && !self.ends_cvc(self.b.len() - 1)) {
                self.chop(1);
            }
        }
        let len = self.b.len();
        if self.b.last() == Some(&b'l')
            && self.double_consonant(len)
            && self.measure_prefix(len) > 1
        {
            self.chop(1);
        }
    }
}
