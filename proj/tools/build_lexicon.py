#!/usr/bin/env python3
# Copyright 2026 The LexMiner Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates data/lexicon.tsv from the curated word lists below.

Nouns get their plural, verbs their inflected forms. When a word appears in
several lists its tags are merged in list order (closed class, nouns,
adjectives, verbs), so nouns win over verbs for the nominal style of case
headnotes. OVERRIDES has the final say.

    python3 tools/build_lexicon.py > data/lexicon.tsv
"""

import sys

CLOSED = {
    # determiners / predeterminers
    "the": "DT", "a": "DT", "an": "DT", "this": "DT", "these": "DT", "those": "DT",
    "every": "DT", "each": "DT", "some": "DT", "any": "DT", "no": "DT", "another": "DT",
    "either": "DT,CC", "neither": "DT,CC", "that": "WDT,IN,DT", "all": "DT,PDT",
    "both": "DT,PDT,CC", "half": "PDT,NN", "such": "JJ,PDT", "several": "JJ",
    "many": "JJ", "much": "JJ,RB", "few": "JJ", "various": "JJ", "same": "JJ",
    # prepositions and subordinators
    "of": "IN", "in": "IN", "on": "IN", "at": "IN", "by": "IN", "for": "IN", "with": "IN",
    "from": "IN", "into": "IN", "onto": "IN", "upon": "IN", "about": "IN", "above": "IN",
    "across": "IN", "after": "IN", "against": "IN", "along": "IN", "among": "IN",
    "amongst": "IN", "around": "IN", "before": "IN", "behind": "IN", "below": "IN",
    "beneath": "IN", "beside": "IN", "besides": "IN", "between": "IN", "beyond": "IN",
    "despite": "IN", "during": "IN", "except": "IN", "inside": "IN", "like": "IN,VB",
    "near": "IN", "off": "IN,RP", "outside": "IN", "over": "IN,RP", "per": "IN",
    "since": "IN", "through": "IN", "throughout": "IN", "till": "IN", "toward": "IN",
    "towards": "IN", "under": "IN", "underneath": "IN", "unlike": "IN", "until": "IN",
    "unto": "IN", "via": "IN", "within": "IN", "without": "IN", "whether": "IN",
    "because": "IN", "although": "IN", "though": "IN", "while": "IN", "whilst": "IN",
    "whereas": "IN", "if": "IN", "unless": "IN", "than": "IN", "as": "IN,RB",
    "notwithstanding": "IN", "regarding": "IN", "concerning": "IN", "pending": "IN,JJ",
    "save": "IN,VB", "vis-a-vis": "IN", "inter": "FW", "alia": "FW", "per se": "FW",
    "to": "TO",
    # conjunctions
    "and": "CC", "or": "CC", "but": "CC", "nor": "CC", "yet": "RB,CC", "plus": "CC", "&": "CC",
    # modals
    "can": "MD", "could": "MD", "may": "MD", "might": "MD", "must": "MD", "shall": "MD",
    "should": "MD", "will": "MD,NN", "would": "MD", "ought": "MD", "cannot": "MD",
    # pronouns
    "i": "PRP", "me": "PRP", "you": "PRP", "he": "PRP", "him": "PRP", "she": "PRP",
    "it": "PRP", "we": "PRP", "us": "PRP", "they": "PRP", "them": "PRP", "one": "CD,PRP",
    "myself": "PRP", "yourself": "PRP", "himself": "PRP", "herself": "PRP", "itself": "PRP",
    "ourselves": "PRP", "themselves": "PRP", "someone": "NN", "anyone": "NN",
    "everyone": "NN", "nobody": "NN", "anything": "NN", "nothing": "NN", "something": "NN",
    "my": "PRP$", "your": "PRP$", "his": "PRP$", "its": "PRP$", "our": "PRP$",
    "their": "PRP$", "her": "PRP$,PRP",
    "which": "WDT", "whichever": "WDT", "whatever": "WDT", "who": "WP", "whom": "WP",
    "what": "WP,WDT", "whoever": "WP", "whose": "WP$", "when": "WRB", "where": "WRB",
    "why": "WRB", "how": "WRB", "whereupon": "WRB", "wherein": "WRB", "whereby": "WRB",
    "there": "EX,RB",
    # auxiliaries
    "be": "VB", "is": "VBZ", "are": "VBP", "was": "VBD", "were": "VBD", "been": "VBN",
    "being": "VBG", "am": "VBP", "have": "VBP,VB", "has": "VBZ", "had": "VBD,VBN",
    "having": "VBG", "do": "VBP,VB", "does": "VBZ", "did": "VBD", "done": "VBN",
    "doing": "VBG",
    # adverbs
    "not": "RB", "n't": "RB", "also": "RB", "very": "RB", "too": "RB", "only": "RB,JJ",
    "just": "RB,JJ", "even": "RB", "still": "RB", "already": "RB", "again": "RB",
    "ever": "RB", "never": "RB", "always": "RB", "often": "RB", "soon": "RB", "then": "RB",
    "thus": "RB", "hence": "RB", "therefore": "RB", "however": "RB", "moreover": "RB",
    "furthermore": "RB", "nevertheless": "RB", "nonetheless": "RB", "here": "RB",
    "now": "RB", "later": "RB,JJR", "once": "RB", "rather": "RB", "quite": "RB",
    "almost": "RB", "perhaps": "RB", "merely": "RB", "further": "RB,JJ", "else": "RB",
    "instead": "RB", "otherwise": "RB", "together": "RB", "apart": "RB", "away": "RB",
    "back": "RB,NN", "indeed": "RB", "hereby": "RB", "herein": "RB", "thereafter": "RB",
    "thereby": "RB", "therein": "RB", "thereof": "RB", "hereinafter": "RB",
    "forthwith": "RB", "henceforth": "RB", "abroad": "RB", "ago": "RB", "so": "RB,IN",
    "up": "RP,IN", "out": "RP,IN", "down": "RP,IN", "most": "JJS,RBS", "more": "JJR,RBR",
    "less": "JJR,RBR", "least": "JJS,RBS", "well": "RB", "fairly": "RB", "early": "JJ,RB",
    "duly": "RB", "ultra": "FW", "vires": "FW", "bona": "FW", "fide": "FW", "fides": "FW",
    "mala": "FW", "habeas": "FW", "corpus": "NN", "certiorari": "FW", "mandamus": "FW",
    "quo": "FW", "warranto": "FW", "prima": "FW", "facie": "FW", "locus": "FW",
    "standi": "FW", "suo": "FW", "motu": "FW", "ex": "FW", "parte": "FW", "de": "FW",
    "facto": "FW", "jure": "FW",
    # comparatives / superlatives
    "better": "JJR,RBR", "best": "JJS,RBS", "greater": "JJR", "greatest": "JJS",
    "higher": "JJR", "highest": "JJS", "lower": "JJR,VB", "lowest": "JJS",
    "larger": "JJR", "largest": "JJS", "smaller": "JJR", "smallest": "JJS",
    "earlier": "JJR,RBR", "earliest": "JJS", "fewer": "JJR", "lesser": "JJR",
    "longer": "JJR,RBR", "longest": "JJS", "older": "JJR", "oldest": "JJS",
    "younger": "JJR", "youngest": "JJS", "senior": "JJ,NN", "junior": "JJ,NN",
    "worse": "JJR", "worst": "JJS", "stronger": "JJR", "strongest": "JJS",
    # numbers
    "two": "CD", "three": "CD", "four": "CD", "five": "CD", "six": "CD", "seven": "CD",
    "eight": "CD", "nine": "CD", "ten": "CD", "eleven": "CD", "twelve": "CD",
    "twenty": "CD", "thirty": "CD", "hundred": "CD", "thousand": "CD", "million": "CD",
    "first": "JJ,RB", "second": "JJ,NN", "third": "JJ", "fourth": "JJ", "fifth": "JJ",
    "last": "JJ,RB", "next": "JJ,RB", "final": "JJ",
}

NOUNS = """
abduction absence abuse acceptance access accident accommodation account accusation
acquisition acquittal act action activist activity addition address adjournment
administration admission adoption adult advantage advertisement advice affidavit
affiliation age agency agent agreement agriculture aid allegation allocation allowance
alternative amendment amount analysis answer apartment appeal appearance appellant
applicant application appointment appraisal approval arbitration area argument army
arrangement arrest article assault assembly assessment asset assistance association
assurance attack attempt attendance attention attorney audit authority autonomy award
bail balance ban bank bar basis battery behalf behaviour belief benefit bias bill
birth board body bond border branch breach bribe bribery budget building burden
business cabinet cadre campaign canal candidate candidature capacity capital care
career case caste category cause caution cell censorship certificate chairman chairperson
challenge chamber chance change channel character charge charter chief child choice
church circular circumstance citizen citizenship city claim class clause clerk coercion
collector college commencement commission commissioner committee community company
compensation competition complaint compliance conclusion condition conduct conference
confession confinement conflict conscience consent consequence consideration constable
constitution construction consultation contempt content contract contravention
contribution control convention conviction cooperation copy corporation corruption cost
council counsel count country couple course coverage crime criterion culture curfew
custody customs damage data date day deadline death debate debt decision declaration
decree default defence defense defendant degree delay delegation demand demonstration
denial department deponent deportation deposit deputy description designation detail
detainee detention determination development dignity diligence director disability
discharge disciplinary discipline disclosure discretion discrimination discussion
dismissal dispute disqualification distinction district division doctrine document
domain doubt draft due duty education effect election elector eligibility emergency
employee employer employment end enforcement enquiry entitlement entry environment
equality equity error escape establishment estate evidence examination example
exception exclusion execution executive exemption exercise expenditure experience
expert explanation expression expropriation extension extent extradition fact factor
factory failure fairness faith family fee female file finding fine firm force form
forum foundation fraud freedom function fund gazette gender government governor grade
graduate grant ground group guarantee guardian guidance guideline habit harassment harm
head headmaster health hearing holder holiday home hospital house housing human identity
illegality impact impartiality implementation imprisonment incident income increment
independence individual influence information infringement injunction injury inquiry
inquest institution instruction intent intention interest interference interpretation
interview introduction investigation investment issue job journalist judge judgment
judgement judiciary jurisdiction justice knowledge labour land language law lawyer lease
leave lecturer legislation legislature legitimacy letter liability liberty licence
license life limit list litigation loan locality loss magistrate majority malice
management manager mandate manner marriage matter meaning measure media medium meeting
member membership merit method military minister ministry minority misconduct mistake
mode money month motion motive movement municipality name nation nationality nature
necessity need negligence newspaper notice notification number object objection
obligation occupation offence offense office officer official omission operation opinion
opportunity opposition option order ordinance organisation organization origin owner
ownership pamphlet parent parliament part participation party passport pay payment
penalty pension people percentage performance period permission permit person
personnel petition place plan point police policy position possession post power
practice preference prejudice premises presence president press pressure principal
principle prison prisoner privacy privilege probation procedure proceeding process
proclamation profession professor programme progress prohibition promotion proof
property proportionality prosecution prosecutor protection protest province provision
public publication punishment purpose qualification quality question quota race rank
rate reason reasonableness recommendation record recruitment redress reference refusal
region registrar registration regulation rehabilitation relation release relief
religion remand remedy removal report representation representative reputation request
requirement research reservation residence resident resolution respect respondent
response responsibility restriction result retirement return revenue review revision
right risk role rule ruling safety salary sanction schedule scheme school scope search
seat secretary section sector security seizure selection sentence separation service
session settlement sex share shop sitting situation society soldier source speech staff
stage standard state statement station status statute step strike student subject
submission subsection substance suit summons superintendent supervisor support
suppression surveillance suspect suspension system tax teacher teaching tenure term
termination territory test testimony text theft threat time title torture town trade
trader training transfer treatment treaty trial tribunal trust truth union unit
university use vacancy validity value vehicle verdict victim view village violation
violence vote voter wage war warrant water way welfare wife witness woman word work
worker writ year youth zone
abode absentee accused acre adjudication admissibility affair aggrievance alien
allegiance ambit annulment antecedent appellate applicability appropriation
arbitrariness arms assignment asylum attachment audience balance ballot banner
beneficiary boundary boycott broadcast bureau bylaw cadet camp cancellation canteen
caretaker census ceremony certainty chapter checkpoint circulation civilian claimant
coalition code cohort colleague commander commerce communication comparison complainant
composition concession confidence confiscation consignment conspiracy constituency
consumer contractor convict cooperative correspondence counterpart creditor curriculum
dealer debtor deception deceit defamation deficiency delegate democracy demotion
deprivation detriment dialogue diploma discourse dissent distribution doctor donation
dossier dues dwelling earning economy editor eviction examiner exile expulsion factual
farmer federation fiscal fisherman forfeiture franchise gathering gazetting
goods grievance harbour hierarchy holding hostel hostility household husband ideology
immunity impeachment incarceration incumbent indictment inmate inspector integrity
interdiction invalidity jail kinship landlord landowner legislator lessee
levy licensee livelihood lockup magazine malpractice marketplace merchant migrant
mine misappropriation misuse monopoly nepotism nominee nomination
nondisclosure occupant offender operator ordinance outcome paddy pardon parole
participant passenger patient pensioner permanence perpetrator persecution petitioner
plaintiff plaintiff-respondent plantation poll possessor precedent preamble prerogative
pretext priest procession proclamation producer promoter proprietor prosecutor protester
publisher quorum rally ratification reappointment recipient recital referendum refugee
regime reinstatement relative relocation remuneration renewal repeal reprimand
residency retrenchment retrospectivity revocation riot rostrum sanctity scholarship
secrecy sedition seniority settlement shareholder slander sovereignty spouse stakeholder
stipend subordinate subsidy successor superannuation surety tenant tender testimony
tort trafficking transparency trespass trustee undertaking upgrade vendor verification
veto vicinity vigilance volunteer warden wardenship watchman
""".split()

# Nouns normally seen only in the singular (no generated plural).
MASS_NOUNS = set("""
evidence information advice justice equity health welfare education legislation
corruption bribery torture custody detention imprisonment police personnel staff
media press data equality liberty dignity privacy safety security fairness
negligence malice fraud deceit jurisdiction employment compensation protection
discrimination harassment impartiality proportionality reasonableness transparency
arbitrariness integrity sovereignty legitimacy secrecy sedition trafficking nepotism
commerce agriculture research knowledge labour money censorship surveillance
independence citizenship eligibility seniority permanence vigilance
""".split())

IRREGULAR_PLURALS = {
    "child": "children", "woman": "women", "man": "men", "person": "persons",
    "people": None, "criterion": "criteria", "analysis": "analyses", "basis": "bases",
    "wife": "wives", "life": "lives", "thief": "thieves", "medium": "media",
    "datum": "data", "chairman": "chairmen", "fisherman": "fishermen",
    "watchman": "watchmen", "premises": None, "goods": None, "dues": None,
    "arms": None, "customs": None, "news": None,
    "plaintiff-respondent": "plaintiff-respondents",
}

GENERAL_NOUNS = """
ability access accord achievement adult afternoon airport animal anniversary
apple appetite approach army arrival art artist aspect atmosphere audience author
baby background bag bar base basket bath beach bed beginning bell bench bird blood
boat book bottle box boy brain bread bridge brother budget bus butter cake camera
car card cat ceiling centre center chair champion chapter chart cheek chest chicken
chocolate circle citizen climate clock clothes cloud club coach coast coat coffee
colour color column comfort comment commitment component computer concept concern
concert connection context corner cottage county courage crisis crop crowd cup
customer cycle dance danger daughter dawn deal decade desk device diet difference
dinner direction dirt disease distance doctor dog door dream dress drink driver
ear earth economy edge effort egg emotion energy engine entrance episode equipment
estimate evening event exam exchange exhibition exit expansion expectation eye face
facility fan farm fashion father fear feature feeling festival field figure film
finger fire fish flag flat flight floor flower food foot forest fortune frame friend
fruit fuel future game garden gas gate generation gift girl glass goal gold grass
guest guide gun hair hall hand hat heart heat height hill history hole horse host
hotel hour idea image improvement industry insect instance instrument island item
journey judge juice key kid king kitchen lady lake leader league leg lesson level
library light line link lip literature location lock lunch machine magazine mail
map mark market mass master match material meal meat memory message metal middle
mind minute mirror mission model moment mood morning mother mountain mouth museum
music nail neck network night noise nose note novel object ocean offer oil orange
outcome owner page pain painting pair paper parking passage path pattern peace pen
pencil phase phone photo piano picture piece pipe plane planet plant plate player
pocket poem poet population potato pound practice price pride priority prize problem
product profit project promise property purchase quarter queen radio rain range
reaction reader reading reality recipe relationship rent repair reply resource
restaurant revolution rice ring river road rock roof room root rope round route
salt sample sand scale scene science screen sea season secret sense series shape
sheet ship shirt shoe shop shoulder side sign signal silver sister site size skill
skin sky sleep smile snow software soil song sort sound soup space speaker speed
spirit sport spot spring square stable star start steel stick stock stomach stone
store storm story street strength stress structure studio style success sugar summer
sun surface surprise survey sweet table tale talk tank target task taste tea team
technology telephone television temperature tendency tension theme theory thing
thought ticket tip tone tool tooth topic total touch tour tower toy track tradition
traffic train transport tree trip trouble truck type uncle understanding user
variety version video visit voice volume wall weakness wealth weather week weekend
weight wheel while window wine wing winter wire wood world writer yard
""".split()

ADJECTIVES = """
able absolute academic acceptable accurate active actual additional adequate
administrative adverse aggrieved alleged alternative annual apparent appropriate
arbitrary available average aware bad basic big bogus broad capable capricious
central certain civil clear colonial commercial common comparable competent complete
compulsory concerned conclusive confidential consistent constitutional contrary
convicted correct corrupt criminal critical cruel current customary daily dead
defective degrading democratic dependent detained different difficult direct
disabled disciplinary discriminatory domestic due economic educational effective
eligible empty entire environmental equal essential ethnic everyday excessive
executive existing express extra extraordinary fair false federal female financial
fit foreign formal former free frequent fresh full fundamental further general
genuine good grave great guilty happy hard heavy high historical honest human
identical illegal immediate impartial important impossible improper inadequate
inhuman innocent insufficient interim internal international invalid irrational
irregular irrelevant judicial just juvenile key large late lawful legal legitimate
liable likely limited local long lower mala malicious mandatory manifest material
medical mental military minimum minor moral municipal mutual national natural
necessary negative new normal null objective obvious official old open ordinary
original other own parliamentary particular past peaceful permanent personal
physical political poor popular positive possible practical preliminary present
previous primary prior private procedural professional proper proportionate
provincial public punitive qualified quasi racial real reasonable recent regional
regular relevant religious remote residential responsible retrospective right
rural sacred safe same satisfactory scheduled secondary secular senior separate
serious severe sexual short significant similar simple single social sole special
specific statutory strict strong subsequent substantial successful sudden
sufficient suitable superior supreme temporary total true ultimate unconstitutional
unequal unfair unjust unlawful unreasonable urban usual vague valid various vested
void voluntary vulnerable whole wide written wrong wrongful young
absurd accused actionable ad-hoc adult affirmative ancillary
antecedent apparent appellate applicable authoritative
bona-fide cabinet-level capital cardinal categorical causal clerical coercive
cognisable collateral compensatory concurrent conditional consequential
consecutive constructive contemptuous contractual corrective credible cumulative
custodial defamatory deliberate derogatory detrimental
discretionary disproportionate distinct educational electoral emergent
enforceable entitled erroneous evident exclusive explicit extrajudicial
fraudulent gross habitual hostile implicit inalienable incidental incompetent
inconsistent independent indirect individual inherent injurious integral
intentional irreparable justiciable legislative lethal lenient
malafide meritorious ministerial minimal
nominal notional oppressive overt paramount partial partisan patent pecuniary
penal pending peremptory perverse prejudicial prescribed presidential
presumptive preventive prima-facie probationary prohibited prospective
provisional punishable quasi-judicial ratified redundant remedial repressive
retired revolutionary salutary selective sovereign spurious stringent subordinate
substantive summary supplementary tenable territorial tortious transparent
unauthorised unauthorized unconditional undue unilateral unqualified
unsuccessful untenable vexatious vicarious vindictive
""".split()

# Verbs as base form, optionally with irregular (past, participle).
VERBS = """
abandon abide abolish absolve abuse accept access accompany accord accuse achieve
acknowledge acquire acquit act adduce adjourn adjudicate administer admit adopt
advertise advise affect affirm afford agree aid allege allocate allow alter amend
annul answer appeal appear apply appoint apprehend approach approve argue arise
arrest ask assault assert assess assign assist assume assure attach attack attain
attempt attend attribute authorise authorize avoid await award ban bar base bear
become begin believe belong benefit bind breach break bribe bring build call cancel
carry cause cease certify challenge change charge check choose cite claim clarify
close coerce collect come commence commit communicate compel compensate complain
complete comply conclude condemn conduct confer confine confirm confiscate conform
consent consider constitute construe consult contain contend contest continue
contravene contribute control convene convict cooperate correct cost create
curtail cut deal debar decide declare decline deem defend defer define delay
delegate deliver demand demolish demote deny depart depend deport deprive derive
describe designate detain determine develop deviate die direct disallow discharge
disclose discontinue discover discriminate dismiss dispose dispute disqualify
disregard dissolve distinguish distribute disturb divide draft draw effect elect
eliminate emerge employ enable enact encroach end endorse enforce engage enjoy ensure
enter entertain entitle establish evaluate evict examine exceed exclude execute
exercise exhaust exist expect expel explain express expropriate extend fabricate
fail fall favour favor file find fine follow forbid force forfeit forward frame
function gazette get give go govern grant guarantee handle happen harass hear help
hold identify ignore implement impose imprison improve include incorporate increase
incur indicate infer inflict inform infringe initiate injure inquire insert insist
inspect instal install institute instruct insult intend interdict interfere
interpret interrogate intervene interview introduce invalidate investigate invite
invoke involve issue join judge justify keep kill know lack lay lead learn leave
legislate let levy lie limit list live lodge lose maintain make mandate mark
matter mean meet mention misuse modify move name need negotiate nominate note
notify object oblige obstruct obtain occupy occur offend offer omit open operate
oppose order organise organize overrule override overturn own participate pass
pay penalise perform permit persecute persuade pertain place plead pledge point
possess post postpone practise practice pray prefer prejudice prepare prescribe
present preserve preside prevail prevent proceed process proclaim procure produce
prohibit promise promote promulgate prosecute protect protest prove provide publish
punish pursue put qualify quash question raise reach read receive recognise
recognize recommend reconsider record recover recruit redress refer reflect refrain
refuse regard register regulate reinstate reject relate release relieve rely remain
remand remedy remove render renew repeal replace reply report represent reprimand
request require rescind reserve reside resign resolve respect respond rest restore
restrain restrict result retain retire return reverse revoke rule sanction satisfy
say secure see seek seize select send sentence serve set settle show sign speak
specify stand state stay strike submit subject substitute succeed sue suffer suggest
summon supersede supply support suppress surrender suspend sustain take talk
tamper teach tell tender terminate testify threaten torture transfer treat try turn
uphold urge use vacate vary vest violate visit vote waive want warn withdraw withhold
witness work write
""".split()

IRREGULAR_VERBS = {
    "arise": ("arose", "arisen"), "bear": ("bore", "borne"), "become": ("became", "become"),
    "begin": ("began", "begun"), "bind": ("bound", "bound"), "break": ("broke", "broken"),
    "bring": ("brought", "brought"), "build": ("built", "built"), "choose": ("chose", "chosen"),
    "come": ("came", "come"), "cost": ("cost", "cost"), "cut": ("cut", "cut"),
    "deal": ("dealt", "dealt"), "draw": ("drew", "drawn"), "fall": ("fell", "fallen"),
    "find": ("found", "found"), "forbid": ("forbade", "forbidden"), "get": ("got", "got"),
    "give": ("gave", "given"), "go": ("went", "gone"), "hear": ("heard", "heard"),
    "hold": ("held", "held"), "keep": ("kept", "kept"), "know": ("knew", "known"),
    "lay": ("laid", "laid"), "lead": ("led", "led"), "leave": ("left", "left"),
    "let": ("let", "let"), "lie": ("lay", "lain"), "lose": ("lost", "lost"),
    "make": ("made", "made"), "mean": ("meant", "meant"), "meet": ("met", "met"),
    "override": ("overrode", "overridden"), "pay": ("paid", "paid"), "put": ("put", "put"),
    "read": ("read", "read"), "say": ("said", "said"), "see": ("saw", "seen"),
    "seek": ("sought", "sought"), "send": ("sent", "sent"), "set": ("set", "set"),
    "show": ("showed", "shown"), "speak": ("spoke", "spoken"), "stand": ("stood", "stood"),
    "strike": ("struck", "struck"), "take": ("took", "taken"), "teach": ("taught", "taught"),
    "tell": ("told", "told"), "withdraw": ("withdrew", "withdrawn"),
    "withhold": ("withheld", "withheld"), "write": ("wrote", "written"),
    "uphold": ("upheld", "upheld"), "learn": ("learned", "learned"),
}

DOUBLE_FINAL = set("""
admit commit submit permit omit transfer refer prefer confer defer bar ban compel expel
occur incur control regret fit plan stop rob instal propel dispel abet
""".split())

OVERRIDES = {
    # Proper nouns and nouns that are tagged differently in headnotes.
    "article": "NN", "rights": "NNS", "right": "NN,JJ", "principal": "NN,JJ",
    "constitution": "NN", "state": "NN,VB", "court": "NN", "act": "NN,VB",
    "alleged": "JJ,VBN,VBD", "detained": "VBN,VBD,JJ", "convicted": "VBN,VBD,JJ",
    "concerned": "JJ,VBN", "accused": "NN,JJ,VBN", "retired": "JJ,VBN",
    "existing": "JJ,VBG", "following": "VBG,JJ", "pending": "IN,JJ",
    "hearing": "NN,VBG", "proceeding": "NN,VBG", "finding": "NN,VBG", "ruling": "NN,VBG",
    "sitting": "NN,VBG", "holding": "NN,VBG", "building": "NN,VBG", "meeting": "NN,VBG",
    "teaching": "NN,VBG", "training": "NN,VBG", "earning": "NN,VBG",
    "undertaking": "NN,VBG", "gathering": "NN,VBG", "reading": "NN,VBG",
    "trafficking": "NN,VBG", "parking": "NN,VBG", "painting": "NN,VBG",
    "understanding": "NN,VBG", "sentencing": "NN,VBG", "gazetting": "NN,VBG",
    "deceit": "NN", "influence": "NN,VB", "eligible": "JJ", "candidate": "NN",
    "school": "NN", "post": "NN,VB", "transfer": "NN,VB", "challenged": "VBN,VBD",
    "procured": "VBN,VBD", "who": "WP", "was": "VBD", "subsequent": "JJ",
    "police": "NN", "mala": "FW", "fide": "FW", "per": "IN", "vidyalaya": "NNP",
    "maha": "NNP", "sri": "NNP", "lanka": "NNP", "colombo": "NNP",
    "human": "JJ,NN", "public": "JJ,NN", "criminal": "JJ,NN", "official": "NN,JJ",
    "individual": "JJ,NN", "military": "JJ,NN", "executive": "NN,JJ",
    "capital": "NN,JJ", "fundamental": "JJ", "female": "JJ,NN", "adult": "NN,JJ",
    "representative": "NN,JJ", "subordinate": "JJ,NN", "relative": "NN,JJ",
    "alternative": "NN,JJ", "past": "JJ,IN,NN", "present": "JJ,VB",
    "key": "JJ,NN", "material": "NN,JJ", "detail": "NN", "due": "JJ,NN",
    "order": "NN,VB", "orders": "NNS,VBZ", "ordered": "VBN,VBD", "held": "VBN,VBD",
    "found": "VBN,VBD", "made": "VBN,VBD", "granted": "VBN,VBD",
    "need": "NN,VB", "leave": "NN,VB", "stay": "NN,VB", "use": "NN,VB", "work": "NN,VB",
    "effect": "NN,VB", "cost": "NN,VB", "costs": "NNS,VBZ", "end": "NN,VB",
    "witness": "NN,VB", "matter": "NN,VB", "mark": "NN,VB", "list": "NN,VB",
    "interview": "NN,VB", "vote": "NN,VB", "name": "NN,VB", "check": "NN,VB",
    "note": "NN,VB", "place": "NN,VB", "point": "NN,VB", "return": "NN,VB",
    "result": "NN,VB", "visit": "NN,VB", "promise": "NN,VB", "offer": "NN,VB",
    "question": "NN,VB", "report": "NN,VB", "rest": "NN,VB", "lack": "NN,VB",
    "function": "NN,VB", "limit": "NN,VB", "remedy": "NN,VB", "sentence": "NN,VB",
    "service": "NN,VB", "dispute": "NN,VB", "judge": "NN,VB", "issue": "NN,VB",
    "file": "NN,VB", "fine": "NN,JJ,VB", "grant": "NN,VB", "claim": "NN,VB",
    "appeal": "NN,VB", "arrest": "NN,VB", "challenge": "NN,VB", "charge": "NN,VB",
    "control": "NN,VB", "demand": "NN,VB", "exercise": "NN,VB", "force": "NN,VB",
    "favour": "NN,VB", "favor": "NN,VB", "permit": "NN,VB", "protest": "NN,VB",
    "record": "NN,VB", "release": "NN,VB", "reply": "NN,VB", "request": "NN,VB",
    "review": "NN,VB", "rule": "NN,VB", "sanction": "NN,VB", "support": "NN,VB",
    "tender": "NN,VB", "torture": "NN,VB", "treat": "VB,NN", "trial": "NN",
    "process": "NN,VB", "answer": "NN,VB", "aid": "NN,VB", "attack": "NN,VB",
    "attempt": "NN,VB", "ban": "NN,VB", "bar": "NN,VB", "benefit": "NN,VB",
    "breach": "NN,VB", "bribe": "NN,VB", "change": "NN,VB", "delay": "NN,VB",
    "discharge": "NN,VB", "draft": "NN,VB", "guarantee": "NN,VB", "harm": "NN,VB",
    "increase": "NN,VB", "misuse": "NN,VB", "move": "NN,VB", "pay": "NN,VB",
    "practice": "NN,VB", "prejudice": "NN,VB", "respect": "NN,VB", "search": "NN,VB",
    "suit": "NN,VB", "strike": "NN,VB", "abuse": "NN,VB", "access": "NN,VB",
    "act": "NN,VB", "assault": "NN,VB", "award": "NN,VB", "cause": "NN,VB",
    "deal": "NN,VB", "dismiss": "VB", "dismissed": "VBN,VBD", "state": "NN,VB",
    "states": "NNS,VBZ", "stated": "VBN,VBD", "remand": "NN,VB", "redress": "NN,VB",
    "reprimand": "NN,VB", "waive": "VB", "gazette": "NN,VB", "levy": "NN,VB",
    "post": "NN,VB", "posts": "NNS,VBZ", "posted": "VBN,VBD", "transfer": "NN,VB",
    "mandate": "NN,VB", "witness": "NN,VB", "test": "NN,VB", "talk": "NN,VB",
    "pledge": "NN,VB", "plan": "NN,VB", "form": "NN,VB", "fund": "NN,VB",
    "head": "NN,VB", "house": "NN,VB", "land": "NN,VB", "lease": "NN,VB",
    "license": "NN,VB", "licence": "NN,VB", "loan": "NN,VB", "list": "NN,VB",
    "object": "NN,VB", "share": "NN,VB", "trade": "NN,VB", "trust": "NN,VB",
    "water": "NN,VB", "notice": "NN,VB", "order": "NN,VB", "estimate": "NN,VB",
    "dance": "NN,VB", "dream": "NN,VB", "drink": "NN,VB", "exchange": "NN,VB",
    "fire": "NN,VB", "guide": "NN,VB", "host": "NN,VB", "match": "NN,VB",
    "repair": "NN,VB", "sample": "NN,VB", "sign": "NN,VB", "signal": "NN,VB",
    "smile": "NN,VB", "start": "NN,VB", "store": "NN,VB", "surprise": "NN,VB",
    "survey": "NN,VB", "touch": "NN,VB", "tour": "NN,VB", "train": "NN,VB",
    "transport": "NN,VB", "trouble": "NN,VB", "rent": "NN,VB", "purchase": "NN,VB",
    "measure": "NN,VB", "stress": "NN,VB", "comment": "NN,VB", "date": "NN,VB",
    "view": "NN,VB", "word": "NN", "close": "VB,JJ,RB", "open": "JJ,VB",
    "free": "JJ,VB", "secure": "VB,JJ", "correct": "JJ,VB", "separate": "JJ,VB",
    "express": "JJ,VB", "just": "RB,JJ", "void": "JJ,NN", "null": "JJ",
    "lower": "JJR,VB", "vested": "VBN,JJ", "entitled": "VBN,JJ", "retired": "JJ,VBN",
    "prohibited": "VBN,JJ", "prescribed": "VBN,JJ", "ratified": "VBN,JJ",
    "scheduled": "JJ,VBN", "qualified": "JJ,VBN", "limited": "JJ,VBN",
    "aggrieved": "JJ,VBN", "disabled": "JJ,VBN", "detained": "VBN,VBD,JJ",
}


def plural(noun):
    if noun in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[noun]
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in "aeiou":
        return noun[:-1] + "ies"
    return noun + "s"


def third_person(verb):
    if verb.endswith(("s", "x", "z", "ch", "sh", "o")):
        return verb + "es"
    if verb.endswith("y") and verb[-2] not in "aeiou":
        return verb[:-1] + "ies"
    return verb + "s"


def regular_past(verb):
    if verb in DOUBLE_FINAL:
        return verb + verb[-1] + "ed"
    if verb.endswith("e"):
        return verb + "d"
    if verb.endswith("y") and verb[-2] not in "aeiou":
        return verb[:-1] + "ied"
    return verb + "ed"


def gerund(verb):
    if verb.endswith("ie"):
        return verb[:-2] + "ying"
    if verb in DOUBLE_FINAL:
        return verb + verb[-1] + "ing"
    if verb.endswith("e") and not verb.endswith(("ee", "ye", "oe")) and verb != "be":
        return verb[:-1] + "ing"
    return verb + "ing"


def main():
    entries = {}

    def add(word, tags):
        word = word.lower()
        cur = entries.setdefault(word, [])
        for t in tags.split(","):
            if t not in cur:
                cur.append(t)

    for w, t in CLOSED.items():
        if " " not in w:
            add(w, t)
    for n in NOUNS + GENERAL_NOUNS:
        add(n, "NN")
        if n in MASS_NOUNS:
            continue
        p = plural(n)
        if p:
            add(p, "NNS")
    for a in ADJECTIVES:
        add(a, "JJ")
    for v in VERBS:
        add(v, "VB,VBP")
        add(third_person(v), "VBZ")
        if v in IRREGULAR_VERBS:
            past, part = IRREGULAR_VERBS[v]
        else:
            past = part = regular_past(v)
        if past == part:
            add(past, "VBN,VBD")
        else:
            add(past, "VBD")
            add(part, "VBN")
        add(gerund(v), "VBG")
    for w, t in OVERRIDES.items():
        entries[w] = t.split(",")

    # Closed-class entries are never overridden by the open lists.
    for w, t in CLOSED.items():
        if " " not in w:
            entries[w] = t.split(",")

    out = sys.stdout
    out.write("# word<TAB>tags, most likely first. Generated by tools/build_lexicon.py.\n")
    for w in sorted(entries):
        out.write(f"{w}\t{','.join(entries[w])}\n")


if __name__ == "__main__":
    main()
