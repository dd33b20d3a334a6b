"""Worker instructions shipped with each crowdsourcing export."""

from typing import Dict

from src.models.enums import EvalTask

TASK1_GUIDELINE = """\
Task 1: Salesperson-Customer Conversation

In order to improve the skills to sell more products, a beginner salesperson is learning dialogue strategies by reading prior conversations between customers and other salespeople. This beginner salesperson needs your help to determine if a salesperson used a good dialogue strategy to conduct an effective and strategic sales conversion.

In more detail, you will be presented with one conversation history between a salesperson and a customer. The salesperson may recommend a movie, a song, attractions and so on for the customer. Instead of recommending a product or service to the customer directly, the salesperson wants to make the recommendation more gradually and naturally by starting the conversation with chit-chat.

In this task, you need to rate the conversation from the following 3 aspects:
- How relevant is the recommended product or service to the conversation context?
- How aggressive is the salesperson’s communication strategy?
- Do you think the sales conversation is overall a good example of making sales recommendations?

Questions
- How relevant is the recommended product or service to the conversation context?
  - 1: Not at all (it is impossible for me to find the relevance between the recommended item and the context)
  - 2: Less than neutral (it is a bit hard for me to find the relevance between the recommended item and the context)
  - 3: Neutral (With some effort, I can find a reasonable relevance between the recommended item and the context)
  - 4: Relevant (I can easily find that the recommend item has obvious relevance with the context, even though the recommended item is not perfectly matching the context)
  - 5: Very Relevant (the recommended item is perfectly matching the context)
- How aggressive is the salesperson’s communication?
  - 1: Not aggressive at all (the conversation flows very naturally and smoothly from chit-chat to making recommendations; If I was the customer, I feel very comfortable when the salesperson is making recommendations)
  - 2: Less than neutral (The flow of the conversation is generally natural and smooth, although there are few imperfections)
  - 3: Neutral (The salesperson starts to recommend an item; It is ok to me)
  - 4: Aggressive (The salesperson suddenly starts to recommend an item; this makes me a bit uncomfortable)
  - 5: Very aggressive (The salesperson suddenly starts to recommend an item; this makes me very uncomfortable)
- Is the sales conversation overall a good example to the beginner salesperson?
  - 1: Not at all (This example is really very bad; the beginner salesperson should not spend time on learning this example)
  - 2: Less than neutral (This example is not good; it would not be a pity if the beginner salesperson skips it)
  - 3: Neutral (This is not a bad example; the beginner salesperson may learn some useful dialogue skills from it, but not very much)
  - 4: Good (This is a good example of making recommendations; the imperfections can be ignored; the beginner salesperson should keep this example in his mind)
  - 5: Very good (This is a perfect example of making recommendations; the beginner salesperson should keep it deeply in his mind)
"""

TASK2_GUIDELINE = """\
Task 2: Chit-Chat to Task-Oriented Transition

In order to improve the skills to sell more products, a beginner salesperson is learning dialogue strategies by reading prior conversations between customers and other salespeople. This beginner salesperson needs your help to determine if a salesperson used a good dialogue strategy to conduct an effective and strategic sales conversion.

You will be presented with a conversation between a salesperson and a customer. The salesperson may recommend a movie, a song, attractions and so on for the customer. Instead of recommending a product or service to the customer directly, the salesperson wants to make the recommendation more gradually and naturally by starting the conversation with chit-chat. Once the salesperson thinks it is the right time, he will say something (named transition in this task) to change the conversation from chit-chat to recommendation-making.

In this task, you will need to rate the transition from the following 4 aspects:
- Is it the right time to make the transition?
- Is the transition relevant to the conversation context?
- Is the transition aggressive?
- Is the transition overall good?

Questions
- Is it the right time to make the transition?
  - 1: Very bad time (This is definitely not the right time to do it. It is highly likely that the customer will find you very annoying)
  - 2: Bad time (This is not a good time to make the transition. It may cause negative customer feelings)
  - 3: Neutral (I don’t think making the transition at the time is good, but it is ok to me to continue the conversation if I was the customer)
  - 4: Good time (it is a good time to make the transition, but maybe it will be perfect if the transition is made earlier or later)
  - 5: Very good time (it is a perfect time to make the transition)
- Is the transition relevant to the conversation context?
  - 1: Not at all (it is impossible for me to find the relevance between the transition and the context)
  - 2: Less than neutral (it is a bit hard for me to find the relevance between the transition and the context)
  - 3: Neutral (With some effort, I can find a reasonable relevance between the transition and the context)
  - 4: Relevant (I can easily find that the transition has obvious relevance with the context, even though the transition is not perfectly matching the context)
  - 5: Very Relevant (the transition is perfectly matching the context; it is hard for me to find a better transition)
- Is the transition aggressive?
  - 1: Not aggressive at all (the conversation flows very naturally and smoothly from chit-chat to making the transition; If I was the customer, I feel very comfortable when the salesperson is doing it)
  - 2: Less than neutral (The flow of the conversation is generally natural and smooth, although there are few imperfections)
  - 3: Neutral (The salesperson starts to make the transition; It is ok to me)
  - 4: Aggressive (The salesperson suddenly starts to make the transition; this makes me a bit uncomfortable)
  - 5: Very aggressive (The salesperson suddenly starts to make the transition; this makes me very uncomfortable)
- Is the transition overall good?
  - 1: Not at all (This transition is really very bad; the beginner should not spend time on leaning this transition)
  - 2: Less than neutral (This transition is not good; It would not be a pity if the beginner salesperson skips this example)
  - 3: Neutral (This is not a bad transition; the beginner salesperson may learn some useful dialogue skills from it, but not very much)
  - 4: Good (This is a good example of making a transition; the imperfections can be ignored; the beginner salesperson should keep this example in his mind)
  - 5: Very good (This is a perfect example of making a transition; the beginner salesperson should keep it deeply in his mind)
- Which transition of the following do you think is the best?
  - transition 1
  - transition 2
  - transition 3
  - transition 4
"""

TASK3_GUIDELINE = """\
Task 3: Customer's Implicit Intent

In order to improve skills to sell more products, some beginner salespersons are practicing dialogue strategies by reading prior conversations between customers and other salespeople. When reading a conversation, they will try to guess what the customer is thinking or what the customer might be most likely interested in. These beginner salespersons need your opinions about the reasonability of their answers.

In this task, you will be presented with a conversation snippet between a salesperson and a customer. These beginners provided their guesses right after a customer's utterance. There are three sets of intent detected by different salespersons. You will need to rank them in terms of the intent relevance (implicit intent) with the conversation. If they have the exactly same intent, you can give them the same rank. Otherwise, please decide which is the better one. 1 for the best intents. 3 for the worst intents. In addition, "None" means there isn't any intent detected by the salespersons.

Example

Sales: Hello, what is your hobby?
User: I like to read a lot. I also like to go to the movies. What about yourself?

  - [FindMovies, LookupMusic]
  - [PlaySong]
  - [LookupMusic]

All possible intents might exist in the conversation.
- LookupSong: find songs to listen to
- PlaySong: play songs
- LookupMusic: find music to listen to
- FindMovies: find movies to watch
- GetTimesForMovie: obtain the available time for watching a movie
- FindAttractions: find attractions to visit

Questions
- Please select the rank for the [FindMovies, LookupMusic].
  - 1
  - 2
  - 3
- Please select the rank for the [PlaySong].
  - 1
  - 2
  - 3
- Please select the rank for the [LookupMusic].
  - 1
  - 2
  - 3
- Please choose your own answers given this conversation.
  - LookupSong
  - PlaySong
  - LookupMusic
  - FindMovies
  - GetTimesForMovie
  - FindAttractions
  - None
"""

GUIDELINES: Dict[EvalTask, str] = {
    EvalTask.CONVERSATION: TASK1_GUIDELINE,
    EvalTask.TRANSITION: TASK2_GUIDELINE,
    EvalTask.IMPLICIT_INTENT: TASK3_GUIDELINE,
}


def guideline_for(task: EvalTask | int) -> str:
    return GUIDELINES[EvalTask(task)]
